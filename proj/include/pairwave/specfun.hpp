#pragma once

#include "pairwave/specfun/bessel.hpp"
#include "pairwave/specfun/hypergeometric.hpp"
#include "pairwave/specfun/lommel.hpp"
#include "pairwave/specfun/polygamma.hpp"
