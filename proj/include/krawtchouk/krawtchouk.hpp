#pragma once

// Krawtchouk operator calculus: transforms, exact inversion, linearization,
// and convolution over the Bernoulli(p) model, in exact rational or float64
// arithmetic.

#include "bases.hpp"
#include "convolution.hpp"
#include "core.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "scalar.hpp"
#include "transform.hpp"
#include "verify.hpp"
