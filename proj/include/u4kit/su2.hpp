#pragma once

namespace u4 {

// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> with all spins doubled
// (7/2 passed as 7). Selection-rule violations return 0; negative or
// inconsistent-parity spins throw.
double su2_cgc(int j1, int m1, int j2, int m2, int J, int M);

}  // namespace u4
