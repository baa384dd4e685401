#ifndef SEVENCORE_SEVENCORE_HPP
#define SEVENCORE_SEVENCORE_HPP

#include "arithmetic.hpp"
#include "cores.hpp"
#include "errors.hpp"
#include "forms.hpp"
#include "series.hpp"
#include "thetas.hpp"
#include "verify.hpp"

#endif
