#ifndef COXMUT_COXMUT_HPP
#define COXMUT_COXMUT_HPP

#include "affine.hpp"
#include "canonical.hpp"
#include "catalogue.hpp"
#include "coxeter_matrix.hpp"
#include "cycles.hpp"
#include "errors.hpp"
#include "exchange.hpp"
#include "gram.hpp"
#include "manifold.hpp"
#include "mutation_class.hpp"
#include "perm.hpp"
#include "presentation.hpp"
#include "presentation_io.hpp"
#include "quadfield.hpp"
#include "roots.hpp"
#include "schreier_sims.hpp"
#include "tables.hpp"
#include "todd_coxeter.hpp"
#include "word.hpp"

#endif // COXMUT_COXMUT_HPP
