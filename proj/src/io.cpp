#include "dforms/io.hpp"

#include <fstream>
#include <sstream>

namespace dforms {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string index_field(IndexMask m) {
  std::string out;
  for (int i : mask_indices(m)) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

IndexMask parse_index_field(const std::string& field, int n, int line) {
  std::string t = trim(field);
  if (t.empty()) return 0;
  std::vector<int> idx;
  std::stringstream ss(t);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      idx.push_back(std::stoi(trim(tok)));
    } catch (const std::exception&) {
      throw ParseError(line, "bad index '" + tok + "'");
    }
  }
  try {
    return mask_from_indices(idx, n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line, e.what());
  }
}

}  // namespace

void write_double_form(std::ostream& os, const DoubleForm& f) {
  os << f.dim() << ' ' << f.left_degree() << ' ' << f.right_degree() << ' '
     << (f.mode() == ScalarMode::Exact ? "exact" : "float") << '\n';
  for (const auto& [k, v] : f.entries())
    os << index_field(k.left) << " | " << index_field(k.right) << " | "
       << v.str() << '\n';
}

namespace {

// Reads one form block; `line` tracks the position in the enclosing stream.
DoubleForm read_block(std::istream& is, int& line) {
  std::string header;
  do {
    if (!std::getline(is, header))
      throw ParseError(line, "missing double form header");
    ++line;
  } while (trim(header).empty());

  std::stringstream hs(header);
  int n, p, q;
  std::string mode_word;
  if (!(hs >> n >> p >> q >> mode_word))
    throw ParseError(line, "header must be 'n p q mode'");
  ScalarMode mode;
  if (mode_word == "exact")
    mode = ScalarMode::Exact;
  else if (mode_word == "float")
    mode = ScalarMode::Float64;
  else
    throw ParseError(line, "unknown mode '" + mode_word + "'");
  if (p < 0 || q < 0 || p > n || q > n)
    throw ParseError(line, "bidegree out of range");

  DoubleForm f(n, p, q, mode);
  std::string row;
  while (std::getline(is, row)) {
    ++line;
    if (trim(row).empty()) break;  // blank line ends the block
    auto bar1 = row.find('|');
    auto bar2 = bar1 == std::string::npos ? std::string::npos
                                          : row.find('|', bar1 + 1);
    if (bar2 == std::string::npos)
      throw ParseError(line, "entry must be 'left | right | value'");
    IndexMask left = parse_index_field(row.substr(0, bar1), n, line);
    IndexMask right =
        parse_index_field(row.substr(bar1 + 1, bar2 - bar1 - 1), n, line);
    if (mask_degree(left) != p || mask_degree(right) != q)
      throw ParseError(line, "entry degree does not match header bidegree");
    Scalar v;
    try {
      v = Scalar::parse(trim(row.substr(bar2 + 1)), mode);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, e.what());
    }
    if (!f.coefficient(left, right).is_zero())
      throw ParseError(line, "duplicate entry");
    f.add_entry(left, right, v);
  }
  return f;
}

}  // namespace

DoubleForm read_double_form(std::istream& is) {
  int line = 0;
  return read_block(is, line);
}

DoubleForm read_double_form(std::istream& is, int& line) {
  return read_block(is, line);
}

std::string to_text(const DoubleForm& f) {
  std::ostringstream os;
  write_double_form(os, f);
  return os.str();
}

DoubleForm from_text(const std::string& text) {
  std::istringstream is(text);
  return read_double_form(is);
}

void save_double_form(const DoubleForm& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  write_double_form(os, f);
}

DoubleForm load_double_form(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open " + path);
  return read_double_form(is);
}

void write_decomposition(std::ostream& os, const DecompositionResult& d) {
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    os << "component " << i << '\n';
    write_double_form(os, d.components[i]);
    os << '\n';
  }
}

DecompositionResult read_decomposition(std::istream& is) {
  DecompositionResult d{{}, DoubleForm(0, 0, 0, ScalarMode::Exact)};
  int line = 0;
  std::string header;
  while (std::getline(is, header)) {
    ++line;
    if (trim(header).empty()) continue;
    std::stringstream hs(header);
    std::string word;
    std::size_t index;
    if (!(hs >> word >> index) || word != "component")
      throw ParseError(line, "expected 'component <i>' header");
    if (index != d.components.size())
      throw ParseError(line, "components out of order");
    d.components.push_back(read_block(is, line));
  }
  if (d.components.empty())
    throw ParseError(line, "no components in decomposition");
  int n = d.components.front().dim();
  int p = static_cast<int>(d.components.size()) - 1;
  DoubleForm rec(n, p, p, d.components.front().mode());
  for (int i = 0; i <= p; ++i)
    rec += wedge(metric_power(n, p - i, rec.mode()), d.components[i]);
  d.reconstruction = rec;
  return d;
}

}  // namespace dforms
