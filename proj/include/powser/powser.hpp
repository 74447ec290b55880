#pragma once

// Umbrella header: exact truncated power series over rationals, the
// Toeplitz-Hessenberg determinant routes, the special-number layer, and the
// verification/bench surfaces.

#include "powser/bench.hpp"
#include "powser/combinatorics.hpp"
#include "powser/corpus.hpp"
#include "powser/errors.hpp"
#include "powser/hessenberg.hpp"
#include "powser/numbers.hpp"
#include "powser/partitions.hpp"
#include "powser/rational.hpp"
#include "powser/report.hpp"
#include "powser/series.hpp"
#include "powser/series_io.hpp"
#include "powser/verify.hpp"
