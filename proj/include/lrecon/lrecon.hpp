#pragma once

#include "lrecon/errors.hpp"
#include "lrecon/integer.hpp"
#include "lrecon/poly_z.hpp"
#include "lrecon/poly_fp.hpp"
#include "lrecon/cyclo.hpp"
#include "lrecon/dirichlet_series.hpp"
#include "lrecon/number_field.hpp"
#include "lrecon/ldata.hpp"
#include "lrecon/recon.hpp"
#include "lrecon/datum_gen.hpp"
#include "lrecon/finite_group.hpp"
#include "lrecon/monomial.hpp"
#include "lrecon/structures.hpp"
#include "lrecon/d4_example.hpp"
