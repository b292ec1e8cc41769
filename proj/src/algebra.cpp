#include "qdiv/algebra.hpp"

#include <sstream>

namespace qdiv {

std::string Triple::to_string() const {
  return "(" + qdiv::to_string(c1) + ", " + qdiv::to_string(c2) + ", " +
         qdiv::to_string(c3) + ")";
}

Triple parse_triple(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) parts.push_back(cur);
  if (parts.size() != 3)
    throw std::invalid_argument("parse_triple: expected 'c1,c2,c3', got '" +
                                s + "'");
  return Triple{parse_rational(parts[0]), parse_rational(parts[1]),
                parse_rational(parts[2])};
}

AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) {
  if (u.spec != v.spec)
    throw std::invalid_argument("multiply: mismatched algebra specs");
  const Triple& c = u.spec.c;
  QuadElem top = u.x * v.x + (c.c2 * u.y + c.c3 * u.y.conjugate()) * v.y;
  QuadElem bot =
      u.y * v.x +
      ((Rational(1) - c.c1) * u.x + c.c1 * u.x.conjugate()) * v.y;
  return {top, bot, u.spec};
}

AlgebraElement basis_element(const AlgebraSpec& spec, int k) {
  const QuadField& f = spec.field;
  switch (k) {
    case 0: return {QuadElem::one(f), QuadElem::zero(f), spec};
    case 1: return {QuadElem::sqrt_z(f), QuadElem::zero(f), spec};
    case 2: return {QuadElem::zero(f), QuadElem::one(f), spec};
    case 3: return {QuadElem::zero(f), QuadElem::sqrt_z(f), spec};
  }
  throw std::invalid_argument("basis_element: index out of range");
}

std::array<Rational, 4> coords(const AlgebraElement& u) {
  return {u.x.a(), u.x.b(), u.y.a(), u.y.b()};
}

AlgebraElement from_coords(const AlgebraSpec& spec,
                           const std::array<Rational, 4>& v) {
  return {QuadElem(spec.field, v[0], v[1]), QuadElem(spec.field, v[2], v[3]),
          spec};
}

StructureConstants structure_constants(const AlgebraSpec& spec) {
  StructureConstants sc;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      auto prod = coords(multiply(basis_element(spec, i), basis_element(spec, j)));
      for (int k = 0; k < 4; ++k) sc.t[i][j][k] = prod[k];
    }
  return sc;
}

nlohmann::ordered_json structure_constants_json(const AlgebraSpec& spec) {
  auto sc = structure_constants(spec);
  nlohmann::ordered_json tensor = nlohmann::ordered_json::array();
  for (int i = 0; i < 4; ++i) {
    nlohmann::ordered_json plane = nlohmann::ordered_json::array();
    for (int j = 0; j < 4; ++j) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int k = 0; k < 4; ++k) row.push_back(to_string(sc.at(i, j, k)));
      plane.push_back(row);
    }
    tensor.push_back(plane);
  }
  return tensor;
}

linalg::Mat left_mult_matrix(const AlgebraSpec& spec,
                             const AlgebraElement& u) {
  linalg::Mat m = linalg::zeros(4, 4);
  for (int k = 0; k < 4; ++k) {
    auto col = coords(multiply(u, basis_element(spec, k)));
    for (int i = 0; i < 4; ++i) m[i][k] = col[i];
  }
  return m;
}

linalg::Mat right_mult_matrix(const AlgebraSpec& spec,
                              const AlgebraElement& u) {
  linalg::Mat m = linalg::zeros(4, 4);
  for (int k = 0; k < 4; ++k) {
    auto col = coords(multiply(basis_element(spec, k), u));
    for (int i = 0; i < 4; ++i) m[i][k] = col[i];
  }
  return m;
}

Rational left_mult_det(const AlgebraSpec& spec, const AlgebraElement& u) {
  return linalg::det(left_mult_matrix(spec, u));
}

std::vector<AlgebraElement> right_nucleus_basis(const AlgebraSpec& spec) {
  // (e_i e_j) n = e_i (e_j n) for all pairs, i.e. n lies in the kernel of
  // every L_{e_i e_j} - L_{e_i} L_{e_j}. Stack the 16 blocks and solve.
  std::array<linalg::Mat, 4> L;
  for (int k = 0; k < 4; ++k)
    L[k] = left_mult_matrix(spec, basis_element(spec, k));
  auto sc = structure_constants(spec);
  linalg::Mat sys = linalg::zeros(64, 4);
  std::size_t row = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      // L_{e_i e_j} expanded through the structure constants.
      linalg::Mat lhs = linalg::zeros(4, 4);
      for (int k = 0; k < 4; ++k) {
        if (sc.at(i, j, k) == 0) continue;
        for (int r = 0; r < 4; ++r)
          for (int s = 0; s < 4; ++s) lhs[r][s] += sc.at(i, j, k) * L[k][r][s];
      }
      linalg::Mat rhs = linalg::mul(L[i], L[j]);
      for (int r = 0; r < 4; ++r, ++row)
        for (int s = 0; s < 4; ++s) sys[row][s] = lhs[r][s] - rhs[r][s];
    }
  std::vector<AlgebraElement> basis;
  for (const auto& v : linalg::nullspace(sys))
    basis.push_back(from_coords(spec, {v[0], v[1], v[2], v[3]}));
  return basis;
}

std::vector<AlgebraElement> center_basis(const AlgebraSpec& spec) {
  linalg::Mat sys = linalg::zeros(16, 4);
  std::size_t row = 0;
  for (int j = 0; j < 4; ++j) {
    auto ej = basis_element(spec, j);
    linalg::Mat l = left_mult_matrix(spec, ej);
    linalg::Mat r = right_mult_matrix(spec, ej);
    for (int i = 0; i < 4; ++i, ++row)
      for (int s = 0; s < 4; ++s) sys[row][s] = l[i][s] - r[i][s];
  }
  std::vector<AlgebraElement> basis;
  for (const auto& v : linalg::nullspace(sys))
    basis.push_back(from_coords(spec, {v[0], v[1], v[2], v[3]}));
  return basis;
}

bool is_associative(const AlgebraSpec& spec) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) {
        auto ei = basis_element(spec, i), ej = basis_element(spec, j),
             ek = basis_element(spec, k);
        if (multiply(multiply(ei, ej), ek) != multiply(ei, multiply(ej, ek)))
          return false;
      }
  return true;
}

bool is_commutative(const AlgebraSpec& spec) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      auto ei = basis_element(spec, i), ej = basis_element(spec, j);
      if (multiply(ei, ej) != multiply(ej, ei)) return false;
    }
  return true;
}

TripleClass classify_triple(const AlgebraSpec& spec) {
  const Triple& c = spec.c;
  if (c.c1 == 0 && c.c3 == 0) return TripleClass::FieldK;
  if (c.c1 == 1 && c.c2 == 0) return TripleClass::SkewS;
  return TripleClass::NonAssocN;
}

std::string to_string(TripleClass cls) {
  switch (cls) {
    case TripleClass::FieldK: return "FieldK";
    case TripleClass::SkewS: return "SkewS";
    case TripleClass::NonAssocN: return "NonAssocN";
  }
  return "?";
}

bool is_algebra_automorphism(const AlgebraSpec& spec, const linalg::Mat& phi) {
  if (phi.size() != 4 || phi[0].size() != 4)
    throw std::invalid_argument("is_algebra_automorphism: expected 4x4");
  if (linalg::det(phi) == 0) return false;
  auto image = [&](int k) {
    std::array<Rational, 4> v;
    for (int i = 0; i < 4; ++i) v[i] = phi[i][k];
    return from_coords(spec, v);
  };
  if (image(0) != basis_element(spec, 0)) return false;
  auto sc = structure_constants(spec);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      AlgebraElement lhs = multiply(image(i), image(j));
      // phi(e_i e_j) through the structure constants.
      std::array<Rational, 4> w{0, 0, 0, 0};
      for (int k = 0; k < 4; ++k) {
        if (sc.at(i, j, k) == 0) continue;
        for (int r = 0; r < 4; ++r) w[r] += sc.at(i, j, k) * phi[r][k];
      }
      if (lhs != from_coords(spec, w)) return false;
    }
  return true;
}

std::array<linalg::Mat, 4> klein_candidate_maps() {
  auto diag = [](int d1, int d2, int d3, int d4) {
    linalg::Mat m = linalg::zeros(4, 4);
    m[0][0] = d1;
    m[1][1] = d2;
    m[2][2] = d3;
    m[3][3] = d4;
    return m;
  };
  // (x, y), (x, -y), (conj x, conj y), (conj x, -conj y): conjugation flips
  // the sqrt(z) coordinates e2, e4; the y-sign flips e3, e4.
  return {diag(1, 1, 1, 1), diag(1, 1, -1, -1), diag(1, -1, 1, -1),
          diag(1, -1, -1, 1)};
}

}  // namespace qdiv
