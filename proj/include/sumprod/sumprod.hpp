#ifndef SUMPROD_SUMPROD_HPP
#define SUMPROD_SUMPROD_HPP

#include "bipoly.hpp"
#include "bounds.hpp"
#include "error.hpp"
#include "ext_field.hpp"
#include "factor_oracle.hpp"
#include "field.hpp"
#include "number_theory.hpp"
#include "parse.hpp"
#include "predicates.hpp"
#include "report.hpp"
#include "setops.hpp"
#include "subgroup.hpp"
#include "sweep.hpp"
#include "unipoly.hpp"

#endif  // SUMPROD_SUMPROD_HPP
