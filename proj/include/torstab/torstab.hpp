#pragma once

#include "torstab/cli.hpp"
#include "torstab/fan.hpp"
#include "torstab/gallery.hpp"
#include "torstab/invariants.hpp"
#include "torstab/io.hpp"
#include "torstab/linalg.hpp"
#include "torstab/lp.hpp"
#include "torstab/oracle.hpp"
#include "torstab/piecewise.hpp"
#include "torstab/polytope.hpp"
#include "torstab/rational.hpp"
#include "torstab/version.hpp"
