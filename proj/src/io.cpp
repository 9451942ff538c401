// Copyright 2026 The approx-gauntlet Authors.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gauntlet/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gauntlet/rng.hpp"

namespace gauntlet::io {

namespace {

// Whitespace tokenizer that tracks 1-based line numbers for error messages.
class TokenReader {
 public:
  explicit TokenReader(const std::string& text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  int line() const { return line_; }

  std::string next_token(const char* what) {
    skip_space();
    if (pos_ >= text_.size()) {
      throw ParseError(line_, std::string("unexpected end of input, expected ") + what);
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  long long next_int(const char* what) {
    const int at = line_after_space();
    const std::string tok = next_token(what);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(at, "expected an integer " + std::string(what) + ", got \"" + tok + "\"");
    }
    return value;
  }

  double next_number(const char* what) {
    const int at = line_after_space();
    const std::string tok = next_token(what);
    double value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw ParseError(at, "expected a number " + std::string(what) + ", got \"" + tok + "\"");
    }
    return value;
  }

  void expect_end() {
    if (!at_end()) {
      throw ParseError(line_, "trailing content after a complete instance");
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
  }
  int line_after_space() {
    skip_space();
    return line_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

std::string shortest_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

KnapsackInstance parse_knapsack(const std::string& text) {
  TokenReader in(text);
  const long long n = in.next_int("item count");
  if (n < 0) throw ParseError(in.line(), "item count must be non-negative");
  const double capacity = in.next_number("capacity");
  if (!(capacity > 0)) throw ParseError(in.line(), "capacity must be positive");
  std::vector<KnapsackItem> items;
  items.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    KnapsackItem item;
    item.value = in.next_number("item value");
    if (item.value < 0) throw ParseError(in.line(), "item value must be non-negative");
    item.weight = in.next_number("item weight");
    if (!(item.weight > 0)) throw ParseError(in.line(), "item weight must be positive");
    items.push_back(item);
  }
  in.expect_end();
  return KnapsackInstance(std::move(items), capacity);
}

std::string write_knapsack(const KnapsackInstance& inst) {
  std::ostringstream out;
  out << inst.item_count() << ' ' << shortest_double(inst.capacity()) << '\n';
  for (int i = 0; i < inst.item_count(); ++i) {
    out << shortest_double(inst.item(i).value) << ' ' << shortest_double(inst.item(i).weight)
        << '\n';
  }
  return out.str();
}

namespace {

struct TsplibHeader {
  std::string type;
  std::string edge_weight_type;
  std::string edge_weight_format;
  long long dimension = -1;
};

// Splits "KEY : value" / "KEY: value" / bare section names.
bool split_header_line(const std::string& line, std::string* key, std::string* value) {
  const std::size_t colon = line.find(':');
  if (colon == std::string::npos) {
    *key = trim(line);
    value->clear();
    return !key->empty();
  }
  *key = trim(line.substr(0, colon));
  *value = trim(line.substr(colon + 1));
  return true;
}

}  // namespace

std::variant<EuclideanTspInstance, MatrixTspInstance> parse_tsplib(const std::string& text,
                                                                   EdgeRounding rounding) {
  std::istringstream stream(text);
  TsplibHeader header;
  std::string line;
  int line_no = 0;
  std::string section;
  std::string body;  // remaining token payload once a data section starts
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    if (trimmed == "EOF") break;
    if (trimmed == "NODE_COORD_SECTION" || trimmed == "EDGE_WEIGHT_SECTION") {
      section = trimmed;
      std::ostringstream rest;
      std::string data_line;
      while (std::getline(stream, data_line)) {
        if (!data_line.empty() && data_line.back() == '\r') data_line.pop_back();
        if (trim(data_line) == "EOF") break;
        rest << data_line << '\n';
      }
      body = rest.str();
      break;
    }
    std::string key;
    std::string value;
    if (!split_header_line(trimmed, &key, &value)) continue;
    if (key == "TYPE") {
      header.type = value;
    } else if (key == "DIMENSION") {
      try {
        header.dimension = std::stoll(value);
      } catch (...) {
        throw ParseError(line_no, "DIMENSION is not an integer: \"" + value + "\"");
      }
    } else if (key == "EDGE_WEIGHT_TYPE") {
      header.edge_weight_type = value;
    } else if (key == "EDGE_WEIGHT_FORMAT") {
      header.edge_weight_format = value;
    }
    // NAME, COMMENT and other metadata keys are accepted and ignored.
  }

  if (!header.type.empty() && header.type != "TSP") {
    throw ParseError("unsupported TYPE: " + header.type);
  }
  if (header.dimension < 2) {
    throw ParseError("missing or invalid DIMENSION");
  }
  const auto n = static_cast<std::size_t>(header.dimension);

  if (header.edge_weight_type == "EUC_2D") {
    if (section != "NODE_COORD_SECTION") {
      throw ParseError("EUC_2D instance is missing NODE_COORD_SECTION");
    }
    TokenReader in(body);
    std::vector<Point> points(n);
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const long long id = in.next_int("city id");
      if (id < 1 || static_cast<std::size_t>(id) > n) {
        throw ParseError(in.line(), "city id " + std::to_string(id) + " outside 1.." +
                                        std::to_string(n));
      }
      if (seen[static_cast<std::size_t>(id - 1)]) {
        throw ParseError(in.line(), "duplicate city id " + std::to_string(id));
      }
      seen[static_cast<std::size_t>(id - 1)] = 1;
      points[static_cast<std::size_t>(id - 1)].x = in.next_number("x coordinate");
      points[static_cast<std::size_t>(id - 1)].y = in.next_number("y coordinate");
    }
    in.expect_end();
    return EuclideanTspInstance(std::move(points), rounding);
  }

  if (header.edge_weight_type == "EXPLICIT") {
    if (!header.edge_weight_format.empty() && header.edge_weight_format != "FULL_MATRIX") {
      throw ParseError("unsupported EDGE_WEIGHT_FORMAT: " + header.edge_weight_format);
    }
    if (section != "EDGE_WEIGHT_SECTION") {
      throw ParseError("EXPLICIT instance is missing EDGE_WEIGHT_SECTION");
    }
    TokenReader in(body);
    std::vector<std::int64_t> d(n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
      const double value = in.next_number("matrix entry");
      if (value < 0 || value != std::floor(value)) {
        throw ParseError(in.line(), "matrix entries must be non-negative integers");
      }
      d[i] = static_cast<std::int64_t>(value);
    }
    in.expect_end();
    try {
      return MatrixTspInstance(static_cast<int>(n), std::move(d));
    } catch (const ValidationError& e) {
      throw ParseError(e.what());
    }
  }

  throw ParseError("unsupported EDGE_WEIGHT_TYPE: " +
                   (header.edge_weight_type.empty() ? "(missing)" : header.edge_weight_type));
}

std::string write_tsplib(const EuclideanTspInstance& inst, const std::string& name) {
  std::ostringstream out;
  out << "NAME: " << name << "\nTYPE: TSP\nDIMENSION: " << inst.city_count()
      << "\nEDGE_WEIGHT_TYPE: EUC_2D\nNODE_COORD_SECTION\n";
  for (int i = 0; i < inst.city_count(); ++i) {
    const Point& p = inst.points()[static_cast<std::size_t>(i)];
    out << i + 1 << ' ' << shortest_double(p.x) << ' ' << shortest_double(p.y) << '\n';
  }
  out << "EOF\n";
  return out.str();
}

std::string write_tsplib(const MatrixTspInstance& inst, const std::string& name) {
  std::ostringstream out;
  out << "NAME: " << name << "\nTYPE: TSP\nDIMENSION: " << inst.city_count()
      << "\nEDGE_WEIGHT_TYPE: EXPLICIT\nEDGE_WEIGHT_FORMAT: FULL_MATRIX\nEDGE_WEIGHT_SECTION\n";
  for (int i = 0; i < inst.city_count(); ++i) {
    for (int j = 0; j < inst.city_count(); ++j) {
      if (j > 0) out << ' ';
      out << inst.distance(i, j);
    }
    out << '\n';
  }
  out << "EOF\n";
  return out.str();
}

Graph parse_dimacs_graph(const std::string& text, int* duplicates_collapsed) {
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  long long n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> edges;
  int duplicates = 0;
  // Set of normalized edges for duplicate detection once n is known.
  std::vector<std::vector<int>> seen;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string trimmed = trim(line);
    if (trimmed.empty() || trimmed[0] == 'c') continue;
    std::istringstream fields(trimmed);
    std::string tag;
    fields >> tag;
    if (tag == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      std::string format;
      fields >> format >> n >> m;
      if (fields.fail() || format != "edge" || n < 0 || m < 0) {
        throw ParseError(line_no, "malformed problem line, expected \"p edge <n> <m>\"");
      }
      seen.resize(static_cast<std::size_t>(n));
    } else if (tag == "e") {
      if (n < 0) throw ParseError(line_no, "edge line before the problem line");
      long long u = 0;
      long long v = 0;
      fields >> u >> v;
      if (fields.fail()) throw ParseError(line_no, "malformed edge line");
      if (u < 1 || u > n || v < 1 || v > n) {
        throw ParseError(line_no, "edge endpoint outside 1.." + std::to_string(n));
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      int a = static_cast<int>(u - 1);
      int b = static_cast<int>(v - 1);
      if (a > b) std::swap(a, b);
      auto& bucket = seen[static_cast<std::size_t>(a)];
      if (std::find(bucket.begin(), bucket.end(), b) != bucket.end()) {
        ++duplicates;
        continue;
      }
      bucket.push_back(b);
      edges.emplace_back(a, b);
    } else {
      throw ParseError(line_no, "unknown line type \"" + tag + "\"");
    }
  }
  if (n < 0) throw ParseError("missing problem line \"p edge <n> <m>\"");
  if (static_cast<long long>(edges.size()) + duplicates != m) {
    throw ParseError("edge count mismatch: header declares " + std::to_string(m) + ", found " +
                     std::to_string(edges.size() + static_cast<std::size_t>(duplicates)));
  }
  if (duplicates_collapsed != nullptr) *duplicates_collapsed = duplicates;
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_dimacs_graph(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

SetCoverInstance parse_orlib_scp(const std::string& text) {
  TokenReader in(text);
  const long long rows = in.next_int("row count");
  const long long cols = in.next_int("column count");
  if (rows <= 0 || cols <= 0) {
    throw ParseError(in.line(), "row and column counts must be positive");
  }
  for (long long j = 0; j < cols; ++j) {
    in.next_number("column cost");  // unicost objective: costs are discarded
  }
  std::vector<std::vector<int>> family(static_cast<std::size_t>(cols));
  for (long long row = 0; row < rows; ++row) {
    const long long count = in.next_int("covering-column count");
    if (count <= 0) {
      throw ParseError(in.line(),
                       "row " + std::to_string(row + 1) + " is covered by no column");
    }
    for (long long t = 0; t < count; ++t) {
      const long long col = in.next_int("column index");
      if (col < 1 || col > cols) {
        throw ParseError(in.line(), "column index " + std::to_string(col) + " outside 1.." +
                                        std::to_string(cols));
      }
      family[static_cast<std::size_t>(col - 1)].push_back(static_cast<int>(row));
    }
  }
  in.expect_end();
  return SetCoverInstance(static_cast<int>(rows), std::move(family));
}

std::string write_orlib_scp(const SetCoverInstance& inst) {
  // Invert column subsets back into the row-major OR-Library layout.
  std::vector<std::vector<int>> row_columns(static_cast<std::size_t>(inst.universe_size()));
  for (int j = 0; j < inst.family_size(); ++j) {
    for (int e : inst.subset(j)) row_columns[static_cast<std::size_t>(e)].push_back(j);
  }
  std::ostringstream out;
  out << inst.universe_size() << ' ' << inst.family_size() << '\n';
  for (int j = 0; j < inst.family_size(); ++j) {
    out << 1 << (j + 1 == inst.family_size() ? '\n' : ' ');
  }
  for (const auto& columns : row_columns) {
    out << columns.size();
    for (int j : columns) out << ' ' << j + 1;
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

double read_optimum_file(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  TokenReader in(text);
  const double value = in.next_number("optimum");
  in.expect_end();
  if (!(value > 0)) {
    throw ValidationError("optimum in " + path.string() + " must be positive");
  }
  return value;
}

std::optional<double> sidecar_optimum(const std::filesystem::path& instance_path) {
  std::filesystem::path replaced = instance_path;
  replaced.replace_extension(".opt");
  if (std::filesystem::exists(replaced)) return read_optimum_file(replaced);
  std::filesystem::path appended = instance_path;
  appended += ".opt";
  if (std::filesystem::exists(appended)) return read_optimum_file(appended);
  return std::nullopt;
}

Problem load_problem(ProblemKind kind, const std::filesystem::path& path, EdgeRounding rounding) {
  const std::string text = read_text_file(path);
  switch (kind) {
    case ProblemKind::knapsack:
      return Problem::knapsack(parse_knapsack(text));
    case ProblemKind::vertex_cover:
      return Problem::vertex_cover(parse_dimacs_graph(text));
    case ProblemKind::independent_set:
      return Problem::independent_set(parse_dimacs_graph(text));
    case ProblemKind::set_cover:
      return Problem::set_cover(parse_orlib_scp(text));
    case ProblemKind::euclidean_tsp: {
      auto parsed = parse_tsplib(text, rounding);
      if (auto* euc = std::get_if<EuclideanTspInstance>(&parsed)) {
        return Problem::euclidean_tsp(std::move(*euc));
      }
      throw ParseError(path.string() + ": expected a EUC_2D instance for euclidean-tsp");
    }
    case ProblemKind::matrix_tsp: {
      auto parsed = parse_tsplib(text, rounding);
      if (auto* mat = std::get_if<MatrixTspInstance>(&parsed)) {
        return Problem::matrix_tsp(std::move(*mat));
      }
      throw ParseError(path.string() + ": expected an EXPLICIT matrix instance for matrix-tsp");
    }
  }
  std::abort();
}

MatrixTspInstance random_matrix_instance(int city_count, std::uint64_t seed, int max_entry) {
  if (city_count < 2) throw ValidationError("matrix instance needs at least 2 cities");
  if (max_entry < 1) throw ValidationError("max entry must be at least 1");
  Rng rng(seed);
  const auto n = static_cast<std::size_t>(city_count);
  std::vector<std::int64_t> d(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto value =
          static_cast<std::int64_t>(1 + rng.below(static_cast<std::uint64_t>(max_entry)));
      d[i * n + j] = value;
      d[j * n + i] = value;
    }
  }
  return MatrixTspInstance(city_count, std::move(d));
}

}  // namespace gauntlet::io
