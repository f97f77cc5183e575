#pragma once

#include <string>
#include <vector>

#include "coxhecke/coxeter.hpp"

namespace coxhecke {

// Built-in Coxeter matrix shortcuts. Recognized names: A1, A2, ... An;
// B2..Bn; I2(m) via make_dihedral; I2inf; G2 (= I2(6)); H3; H4; F4.
// Weights default to split (all 1) when empty; dihedral types take two
// weights, chains take per-generator weights.
CoxeterSystem make_type(const std::string& type, std::vector<int> weights,
                        int dihedral_m = 0);

CoxeterSystem make_dihedral(int m, int L1, int L2);
CoxeterSystem make_dihedral_infinite(int L1, int L2);
CoxeterSystem make_chain_A(int n);                     // A_n, split names 1..n
CoxeterSystem make_B(int n, std::vector<int> weights); // bond 4 at the end
CoxeterSystem make_H3();
CoxeterSystem make_F4(std::vector<int> weights);

}  // namespace coxhecke
