#include "dforms/models.hpp"

#include <fstream>
#include <sstream>

#include "dforms/io.hpp"

namespace dforms {

CurvatureModel sphere_curvature(int n, const Scalar& kappa) {
  if (n < 2) throw DimensionError("sphere curvature needs n >= 2");
  DoubleForm R = metric_power(n, 2, kappa.mode()) *
                 (kappa / Scalar::of_int(2, kappa.mode()));
  std::ostringstream name;
  name << "sphere" << n;
  return CurvatureModel{name.str(), n, CurvatureInput(std::move(R)),
                        "sectional curvature " + kappa.str()};
}

CurvatureModel flat_curvature(int n) {
  return CurvatureModel{"flat" + std::to_string(n), n,
                        CurvatureInput(DoubleForm(n, 2, 2, ScalarMode::Exact)),
                        "zero curvature"};
}

namespace {

// J e_{2i-1} = e_{2i}, J e_{2i} = -e_{2i-1}; entries J(a,b) = <J e_a, e_b>.
int complex_structure(int a, int b) {
  if (b == a + 1 && a % 2 == 1) return 1;
  if (a == b + 1 && b % 2 == 1) return -1;
  return 0;
}

long fs_curvature_entry(int a, int b, int c, int d) {
  auto g = [](int x, int y) { return x == y ? 1 : 0; };
  auto J = complex_structure;
  return g(a, c) * g(b, d) - g(a, d) * g(b, c) + J(a, c) * J(b, d) -
         J(a, d) * J(b, c) + 2 * J(a, b) * J(c, d);
}

}  // namespace

CurvatureModel cpn_curvature(int m) {
  if (m < 1) throw DimensionError("cpn curvature needs m >= 1");
  int n = 2 * m;
  DoubleForm R(n, 2, 2, ScalarMode::Exact);
  for (IndexMask left : basis_masks(n, 2)) {
    auto ab = mask_indices(left);
    for (IndexMask right : basis_masks(n, 2)) {
      auto cd = mask_indices(right);
      long v = fs_curvature_entry(ab[0], ab[1], cd[0], cd[1]);
      if (v != 0) R.add_entry(left, right, Scalar::exact(v));
    }
  }
  return CurvatureModel{"cp" + std::to_string(m), n,
                        CurvatureInput(std::move(R)),
                        "fubini-study, holomorphic sectional curvature 4"};
}

CurvatureModel product_curvature(const CurvatureModel& a,
                                 const CurvatureModel& b) {
  if (a.curvature.mode() != b.curvature.mode())
    throw ModeError("product of models with different scalar modes");
  int n = a.n + b.n;
  DoubleForm R(n, 2, 2, a.curvature.mode());
  for (const auto& [k, v] : a.curvature.tensor().entries())
    R.add_entry(k.left, k.right, v);
  for (const auto& [k, v] : b.curvature.tensor().entries())
    R.add_entry(k.left << a.n, k.right << a.n, v);
  return CurvatureModel{a.name + "x" + b.name, n, CurvatureInput(std::move(R)),
                        a.normalization + " x " + b.normalization};
}

void write_curvature(std::ostream& os, const CurvatureModel& model) {
  os << "model " << model.name << " dim " << model.n << " normalization "
     << model.normalization << '\n';
  write_double_form(os, model.curvature.tensor());
}

CurvatureModel read_curvature(std::istream& is) {
  std::string header;
  int line = 0;
  do {
    if (!std::getline(is, header)) throw ParseError(1, "missing model header");
    ++line;
  } while (header.find_first_not_of(" \t\r") == std::string::npos);

  std::stringstream hs(header);
  std::string kw_model, name, kw_dim, kw_norm;
  int n;
  if (!(hs >> kw_model >> name >> kw_dim >> n >> kw_norm) ||
      kw_model != "model" || kw_dim != "dim" || kw_norm != "normalization")
    throw ParseError(line,
                     "model header must be "
                     "'model <name> dim <n> normalization <text>'");
  std::string normalization;
  std::getline(hs, normalization);
  if (!normalization.empty() && normalization.front() == ' ')
    normalization.erase(0, 1);

  DoubleForm R = read_double_form(is, line);
  if (R.dim() != n)
    throw ParseError(line, "tensor dimension does not match model header");
  if (!R.is_zero() && (R.left_degree() != 2 || R.right_degree() != 2))
    throw ParseError(line, "curvature model tensor must have bidegree (2,2)");
  // Flags are recomputed here; a hand-edited tensor simply loads with its
  // flags reporting what it actually is.
  return CurvatureModel{name, n, CurvatureInput(std::move(R)), normalization};
}

void save_curvature(const CurvatureModel& model, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_curvature(os, model);
}

CurvatureModel load_curvature(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_curvature(is);
}

}  // namespace dforms
