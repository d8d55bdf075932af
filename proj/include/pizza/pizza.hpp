#pragma once

#include "pizza/bounds.hpp"
#include "pizza/errors.hpp"
#include "pizza/format.hpp"
#include "pizza/fourier.hpp"
#include "pizza/geometry.hpp"
#include "pizza/kahan.hpp"
#include "pizza/quadrature.hpp"
#include "pizza/rational.hpp"
#include "pizza/sweep.hpp"
#include "pizza/verify.hpp"
