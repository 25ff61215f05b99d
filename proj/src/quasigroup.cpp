#include "qhopf/quasigroup.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace qhopf {

FiniteLoop FiniteLoop::from_cayley_table(std::vector<std::string> labels,
                                         std::vector<std::vector<int>> table,
                                         const std::string& identity_label) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw BadShape("empty label list");
  if (static_cast<int>(table.size()) != n) throw BadShape("table has wrong number of rows");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n)
      throw BadShape("row " + std::to_string(i) + " has wrong length");
    for (int v : table[i])
      if (v < 0 || v >= n) throw BadShape("entry out of range in row " + std::to_string(i));
  }
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (int j = 0; j < n; ++j) {
      if (seen_row[table[i][j]])
        throw NotLatinSquare("repeated entry '" + labels[table[i][j]] + "' in row " +
                             std::to_string(i));
      seen_row[table[i][j]] = true;
      if (seen_col[table[j][i]])
        throw NotLatinSquare("repeated entry '" + labels[table[j][i]] + "' in column " +
                             std::to_string(i));
      seen_col[table[j][i]] = true;
    }
  }
  int e = -1;
  for (int i = 0; i < n; ++i)
    if (labels[i] == identity_label) { e = i; break; }
  if (e < 0) throw NoIdentity("no element labelled '" + identity_label + "'");
  for (int i = 0; i < n; ++i)
    if (table[e][i] != i || table[i][e] != i)
      throw NoIdentity("'" + identity_label + "' is not a two-sided identity");

  FiniteLoop q;
  q.labels_ = std::move(labels);
  q.table_ = std::move(table);
  q.identity_ = e;
  q.right_inverse_.assign(n, 0);
  q.left_div_.assign(n, std::vector<int>(n, 0));
  q.right_div_.assign(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      int w = q.table_[u][v];
      q.left_div_[u][w] = v;   // u·v = w  =>  u\w = v
      q.right_div_[w][v] = u;  // u·v = w  =>  w/v = u
    }
  for (int u = 0; u < n; ++u) q.right_inverse_[u] = q.left_div_[u][e];
  return q;
}

bool FiniteLoop::is_associative() const {
  const int n = order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (product(product(a, b), c) != product(a, product(b, c))) return false;
  return true;
}

QuasigroupHandle::QuasigroupHandle(FiniteLoop loop) : loop_(std::move(loop)) {}
QuasigroupHandle::QuasigroupHandle(OracleQuasigroup oracle) : oracle_(std::move(oracle)) {}

Elem QuasigroupHandle::identity() const {
  return finite() ? loop_->identity() : oracle_->identity;
}

Elem QuasigroupHandle::product(Elem u, Elem v) const {
  if (finite()) return loop_->product(static_cast<int>(u), static_cast<int>(v));
  return oracle_->product(u, v);
}

Elem QuasigroupHandle::inverse(Elem u) const {
  if (finite()) return loop_->inverse(static_cast<int>(u));
  return oracle_->inverse(u);
}

Elem QuasigroupHandle::left_divide(Elem u, Elem w) const {
  if (finite()) return loop_->left_divide(static_cast<int>(u), static_cast<int>(w));
  Elem v = oracle_->product(oracle_->inverse(u), w);
  if (oracle_->product(u, v) != w)
    throw OracleInconsistent("left_divide: oracle violates the IP law");
  return v;
}

Elem QuasigroupHandle::right_divide(Elem w, Elem u) const {
  if (finite()) return loop_->right_divide(static_cast<int>(w), static_cast<int>(u));
  Elem v = oracle_->product(w, oracle_->inverse(u));
  if (oracle_->product(v, u) != w)
    throw OracleInconsistent("right_divide: oracle violates the IP law");
  return v;
}

std::string QuasigroupHandle::label(Elem u) const {
  if (finite()) return loop_->label(static_cast<int>(u));
  return std::to_string(u);
}

IpReport check_ip(const QuasigroupHandle& q, const std::vector<Elem>* sample) {
  IpReport report;
  std::vector<Elem> elems;
  if (q.finite()) {
    for (int i = 0; i < q.order(); ++i) elems.push_back(i);
  } else {
    if (!sample) throw SampleRequired("check_ip: oracle quasigroup needs a sample");
    elems = *sample;
    report.sampled = true;
  }
  for (Elem u : elems) {
    Elem ui = q.inverse(u);
    if (q.inverse(ui) != u) report.violations.push_back({u, u, true});
    for (Elem v : elems) {
      ++report.pairs_checked;
      if (q.product(ui, q.product(u, v)) != v) report.violations.push_back({u, v, true});
      if (q.product(q.product(v, u), ui) != v) report.violations.push_back({u, v, false});
    }
  }
  return report;
}

FiniteLoop chein_double(const FiniteLoop& g) {
  if (!g.is_associative()) throw NotAssociative("chein_double: input loop is not a group");
  const int n = g.order();
  std::vector<std::string> labels(2 * n);
  for (int i = 0; i < n; ++i) {
    labels[i] = g.label(i);
    labels[n + i] = g.label(i) + "x";
  }
  std::vector<std::vector<int>> table(2 * n, std::vector<int>(2 * n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      table[a][b] = g.product(a, b);                            // g·h = gh
      table[a][n + b] = n + g.product(b, a);                    // g·(hx) = (hg)x
      table[n + a][b] = n + g.product(a, g.inverse(b));         // (gx)·h = (gh⁻¹)x
      table[n + a][n + b] = g.product(g.inverse(b), a);         // (gx)·(hx) = h⁻¹g
    }
  return FiniteLoop::from_cayley_table(std::move(labels), std::move(table),
                                       g.label(g.identity()));
}

namespace {

FiniteLoop parse_loop_json(const std::string& content) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON: ") + e.what(), 1);
  }
  if (!j.contains("labels") || !j.contains("table") || !j.contains("identity"))
    throw ParseError("JSON loop needs keys \"labels\", \"table\", \"identity\"", 1);
  std::vector<std::string> labels = j["labels"].get<std::vector<std::string>>();
  std::vector<std::vector<int>> table = j["table"].get<std::vector<std::vector<int>>>();
  std::string identity = j["identity"].get<std::string>();
  return FiniteLoop::from_cayley_table(std::move(labels), std::move(table), identity);
}

}  // namespace

FiniteLoop parse_loop_text(const std::string& content) {
  size_t first = content.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && content[first] == '{') return parse_loop_json(content);

  std::istringstream in(content);
  std::string line;
  int line_no = 0;
  auto next_line = [&]() {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError("empty file", 1);
  int n = 0;
  {
    std::istringstream ls(line);
    if (!(ls >> n) || n <= 0) throw ParseError("expected positive order n", line_no);
  }
  if (!next_line()) throw ParseError("missing label line", line_no + 1);
  std::vector<std::string> labels;
  {
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) labels.push_back(tok);
  }
  if (static_cast<int>(labels.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " labels, got " +
                         std::to_string(labels.size()),
                     line_no);
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (index.count(labels[i])) throw ParseError("duplicate label '" + labels[i] + "'", line_no);
    index[labels[i]] = i;
  }

  std::vector<std::vector<int>> table;
  for (int r = 0; r < n; ++r) {
    if (!next_line()) throw ParseError("missing table row " + std::to_string(r + 1), line_no + 1);
    std::istringstream ls(line);
    std::vector<int> row;
    std::string tok;
    while (ls >> tok) {
      auto it = index.find(tok);
      if (it == index.end()) throw ParseError("unknown label '" + tok + "'", line_no);
      row.push_back(it->second);
    }
    if (static_cast<int>(row.size()) != n)
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(n),
                       line_no);
    table.push_back(std::move(row));
  }
  return FiniteLoop::from_cayley_table(std::move(labels), std::move(table), labels[0]);
}

FiniteLoop load_loop_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_loop_text(buf.str());
}

OracleQuasigroup integer_addition_oracle() {
  OracleQuasigroup z;
  z.product = [](Elem a, Elem b) { return a + b; };
  z.identity = 0;
  z.inverse = [](Elem a) { return -a; };
  z.name = "Z";
  return z;
}

}  // namespace qhopf
