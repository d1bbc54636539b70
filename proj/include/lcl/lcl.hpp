#pragma once

#include "lcl/axioms.hpp"
#include "lcl/basis.hpp"
#include "lcl/config.hpp"
#include "lcl/deduction.hpp"
#include "lcl/entail.hpp"
#include "lcl/eq_derivation.hpp"
#include "lcl/errors.hpp"
#include "lcl/formula.hpp"
#include "lcl/infer.hpp"
#include "lcl/proof.hpp"
#include "lcl/reduction.hpp"
#include "lcl/saturation.hpp"
#include "lcl/semantics.hpp"
#include "lcl/synthesis.hpp"
#include "lcl/term.hpp"
#include "lcl/tribool.hpp"
#include "lcl/truth_table.hpp"
#include "lcl/type.hpp"
