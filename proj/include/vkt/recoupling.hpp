#pragma once

#include "vkt/roots.hpp"

namespace vkt {

// Non-negative, even sum, triangle inequalities, a + b + c <= 2r - 4.
bool admissible(int a, int b, int c, int r);

Complex theta(int a, int b, int c, const RootParams& ctx);
// Tetrahedral net with vertices (a,d,e), (b,c,e), (a,b,f), (c,d,f).
Complex tet(int a, int b, int e, int c, int d, int f, const RootParams& ctx);

// lambda^{ab}_c = (-1)^((a+b-c)/2) A^((a(a+2) + b(b+2) - c(c+2))/2); conjugate flips the power.
Complex lambda_twist(int a, int b, int c, const RootParams& ctx, bool conjugate = false);

// Delta_i / theta(a,b,i).
Complex fusion_coeff(int a, int b, int i, const RootParams& ctx);
// Weight of the i-labelled I-graph when the j-labelled H-graph with legs a, b, c, d is
// recoupled: Tet[a b i; c d j] Delta_i / (theta(a,d,i) theta(b,c,i)).
Complex recoupling_coeff(int a, int b, int c, int d, int i, int j, const RootParams& ctx);
// Delta_i lambda^{ab}_i / theta(a,b,i).
Complex crossing_coeff(int a, int b, int i, const RootParams& ctx);
// theta(a,b,c) / Delta_c.
Complex bead_removal_coeff(int a, int b, int c, const RootParams& ctx);

enum class ExampleVariant { K, KHat };

// Color sums for the two small worked examples, built on the tabulated reduced graph values
// <G'(a,i)>; available for r = 3 and 4. `conjugate_lambda` swaps every lambda for its conjugate.
Complex example_sums(ExampleVariant variant, int r, bool conjugate_lambda = false);
// Tabulated <G'(a,i)> (0 where the table has no entry).
Complex example_graph_value(int a, int i, int r);

}  // namespace vkt
