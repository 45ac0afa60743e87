#ifndef PLAS_PLAS_HPP
#define PLAS_PLAS_HPP

#include "plas/errors.hpp"
#include "plas/rational.hpp"
#include "plas/symbols.hpp"
#include "plas/multipoly.hpp"
#include "plas/poly_text.hpp"
#include "plas/upoly.hpp"
#include "plas/rat_matrix.hpp"
#include "plas/poly_matrix.hpp"
#include "plas/lie_algebra.hpp"
#include "plas/affine.hpp"
#include "plas/postlie.hpp"
#include "plas/json_io.hpp"
#include "plas/catalog.hpp"

#endif  // PLAS_PLAS_HPP
