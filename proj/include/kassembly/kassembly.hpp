#pragma once

#include "kassembly/algebra_io.hpp"
#include "kassembly/bar_complex.hpp"
#include "kassembly/errors.hpp"
#include "kassembly/graded_algebra.hpp"
#include "kassembly/hochschild.hpp"
#include "kassembly/linalg.hpp"
#include "kassembly/polynomial.hpp"
#include "kassembly/rational.hpp"
#include "kassembly/series.hpp"
#include "kassembly/spectra.hpp"
#include "kassembly/verify.hpp"
