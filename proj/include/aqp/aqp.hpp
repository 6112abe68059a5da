#pragma once

#include "aqp/edit_coverage.hpp"
#include "aqp/edit_distance.hpp"
#include "aqp/gadget.hpp"
#include "aqp/hamming_coverage.hpp"
#include "aqp/lcpk.hpp"
#include "aqp/oracle.hpp"
#include "aqp/parallel.hpp"
#include "aqp/penalty_io.hpp"
#include "aqp/restricted.hpp"
#include "aqp/text.hpp"
#include "aqp/waves.hpp"
