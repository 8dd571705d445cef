#pragma once

// Umbrella header: loops built from doubly even binary codes, the
// two-variable tables that define them, and the identity catalog that
// classifies them.

#include "bitword.hpp"
#include "classify.hpp"
#include "errors.hpp"
#include "factor_set.hpp"
#include "formats.hpp"
#include "gf2.hpp"
#include "identities.hpp"
#include "linear_code.hpp"
#include "loop.hpp"
#include "pipeline.hpp"
#include "report.hpp"
