#include "coxhecke/instances.hpp"

#include <algorithm>

namespace coxhecke {

namespace {

std::vector<std::string> gen_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return names;
}

std::vector<std::vector<int>> bond_matrix(int n) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<int> default_weights(std::vector<int> weights, int n) {
  if (weights.empty()) weights.assign(n, 1);
  return weights;
}

}  // namespace

CoxeterSystem make_dihedral(int m, int L1, int L2) {
  auto mat = bond_matrix(2);
  mat[0][1] = mat[1][0] = m;
  return CoxeterSystem::validate(gen_names(2), mat, {L1, L2});
}

CoxeterSystem make_dihedral_infinite(int L1, int L2) {
  return make_dihedral(kInfinity, L1, L2);
}

CoxeterSystem make_chain_A(int n) {
  auto mat = bond_matrix(n);
  for (int i = 0; i + 1 < n; ++i) mat[i][i + 1] = mat[i + 1][i] = 3;
  return CoxeterSystem::validate(gen_names(n), mat, std::vector<int>(n, 1));
}

CoxeterSystem make_B(int n, std::vector<int> weights) {
  auto mat = bond_matrix(n);
  for (int i = 0; i + 2 < n; ++i) mat[i][i + 1] = mat[i + 1][i] = 3;
  mat[n - 2][n - 1] = mat[n - 1][n - 2] = 4;
  return CoxeterSystem::validate(gen_names(n), mat,
                                 default_weights(std::move(weights), n));
}

CoxeterSystem make_H3() {
  auto mat = bond_matrix(3);
  mat[0][1] = mat[1][0] = 5;
  mat[1][2] = mat[2][1] = 3;
  return CoxeterSystem::validate(gen_names(3), mat, {1, 1, 1});
}

CoxeterSystem make_F4(std::vector<int> weights) {
  auto mat = bond_matrix(4);
  mat[0][1] = mat[1][0] = 3;
  mat[1][2] = mat[2][1] = 4;
  mat[2][3] = mat[3][2] = 3;
  return CoxeterSystem::validate(gen_names(4), mat,
                                 default_weights(std::move(weights), 4));
}

CoxeterSystem make_type(const std::string& type, std::vector<int> weights,
                        int dihedral_m) {
  auto two_weights = [&](int m) {
    if (weights.empty()) weights = {1, 1};
    if (weights.size() != 2)
      fail(ErrorCode::BadInput, "dihedral types take two weights");
    return make_dihedral(m, weights[0], weights[1]);
  };
  if (type == "I2") {
    if (dihedral_m < 2) fail(ErrorCode::BadInput, "I2 needs --m >= 2");
    return two_weights(dihedral_m);
  }
  if (type == "I2inf") return two_weights(kInfinity);
  if (type == "G2") return two_weights(6);
  if (type == "A1xA1") return two_weights(2);
  if (type == "H3") {
    if (!weights.empty() &&
        weights != std::vector<int>(weights.size(), weights[0]))
      fail(ErrorCode::BadWeights, "H3 is odd-bonded: weights must be equal");
    return make_H3();
  }
  if (type == "F4") return make_F4(std::move(weights));
  if (type.size() >= 2 && (type[0] == 'A' || type[0] == 'B')) {
    int n = std::stoi(type.substr(1));
    if (n < 1 || n > 12) fail(ErrorCode::BadInput, "rank out of range");
    if (type[0] == 'A') {
      if (n == 1) {
        auto mat = bond_matrix(1);
        return CoxeterSystem::validate(
            gen_names(1), mat, default_weights(std::move(weights), 1));
      }
      if (!weights.empty() &&
          weights != std::vector<int>(weights.size(), weights[0]))
        fail(ErrorCode::BadWeights, "A-chains are odd-bonded: equal weights");
      auto sys = make_chain_A(n);
      if (!weights.empty()) sys.weights.assign(n, weights[0]);
      return sys;
    }
    if (n == 2) return two_weights(4);
    return make_B(n, std::move(weights));
  }
  fail(ErrorCode::BadInput, "unknown type '" + type + "'");
}

}  // namespace coxhecke
