#pragma once

#include "lehmer/coeff.hpp"
#include "lehmer/cyclo.hpp"
#include "lehmer/divisibility.hpp"
#include "lehmer/error.hpp"
#include "lehmer/factor.hpp"
#include "lehmer/poly.hpp"
#include "lehmer/poly_io.hpp"
#include "lehmer/report.hpp"
#include "lehmer/sequences.hpp"
#include "lehmer/tower.hpp"
#include "lehmer/verifier.hpp"
