#pragma once

#include "omegacat/cells.hpp"

namespace omegacat::fixtures {

// Two objects with a strict isomorphism between them (N = 1).
CategoryPresentation iso1();

// n objects, identity arrows only (N = 1).
CategoryPresentation discrete(int n);

// A single non-invertible arrow a -> b (N = 1).
CategoryPresentation free_arrow();

// Two parallel arrows f, g : a -> b and one 2-cell sigma : f -> g (N = 2).
CategoryPresentation walking2();

// One object, one 1-cell, 2-cells {e^2, t} with t o t = 1 both ways (N = 2).
CategoryPresentation bz2();

// Walking equivalence, truncated at N = 2 with idempotent round trips gf, fg
// and invertible 2-cells gf ~ id_a, fg ~ id_b. Locally thin, so the tables
// close; no strict inverse exists on the 1-level.
CategoryPresentation walk_eq2();

// Skeleton of finite-dimensional vector spaces over F2 up to dimension d:
// objects V0..Vd, hom(Vi, Vj) = all j x i matrices, composition is matrix
// product (N = 1).
CategoryPresentation vec_f2(int dim);

// Matrix helpers for tests that need to talk about vec_f2 cells.
CellId vec_f2_cell(int rows, int cols, const std::vector<std::vector<int>>& entries);
CellId vec_f2_object(int n);

// One object with its identity tower up to the given truncation.
CategoryPresentation one_object(int truncation);

// A presentation assembled from small concrete categories, with the cells
// the tests refer to listed by semantic key.
struct TwoCatFixture {
  CategoryPresentation category;
  std::map<std::string, CellId> named;
};

// Full sub-2-category of Cat on six small categories: the empty category,
// two copies of the terminal, the discrete pair, the walking arrow, and the
// one-object group of order two (N = 2). Carries explicit binary products
// and the equalizer of a 2-cell.
TwoCatFixture cat2six();

// Ambient for the pullback-shaped diagram whose vertex is a category of
// 5-tuples (A, B, C, f, g); three objects (N = 2).
TwoCatFixture weak_pb();

// Every named fixture at its canonical parameters, keyed by name.
std::map<std::string, CategoryPresentation> corpus(int vecf2_dim = 2);

}  // namespace omegacat::fixtures
