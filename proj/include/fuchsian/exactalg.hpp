#ifndef FUCHSIAN_EXACTALG_HPP
#define FUCHSIAN_EXACTALG_HPP

#include "fuchsian/exactalg/factor.hpp"
#include "fuchsian/exactalg/linalg.hpp"
#include "fuchsian/exactalg/parse.hpp"
#include "fuchsian/exactalg/partial_fractions.hpp"
#include "fuchsian/exactalg/poly.hpp"
#include "fuchsian/exactalg/ratfunc.hpp"
#include "fuchsian/exactalg/rational.hpp"
#include "fuchsian/exactalg/series.hpp"

#endif
