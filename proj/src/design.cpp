#include "cascade/design.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cascade {

DefectiveSet make_defective_set(std::vector<ItemId> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

bool is_full_permutation(const TestSeq& t, int n) {
  if (static_cast<int>(t.size()) != n) return false;
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (ItemId v : t) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

void validate_design(const Design& d) {
  if (d.n_items < 1) throw std::invalid_argument("n_items must be positive");
  if (d.max_defectives < 1 || d.max_defectives > d.n_items)
    throw std::invalid_argument("max_defectives must be in 1..n_items");
  for (const TestSeq& t : d.tests) {
    std::set<ItemId> seen;
    for (ItemId v : t) {
      if (v < 1 || v > d.n_items)
        throw std::invalid_argument("test item out of range 1..n_items");
      if (!seen.insert(v).second)
        throw std::invalid_argument("duplicate item within a test");
    }
  }
}

ItemId run_test(const TestSeq& t, const DefectiveSet& defectives) {
  for (ItemId v : t) {
    if (std::binary_search(defectives.begin(), defectives.end(), v)) return v;
  }
  return 0;
}

OutputVector run_design(const Design& d, const DefectiveSet& defectives) {
  if (static_cast<int>(defectives.size()) > d.max_defectives)
    throw std::invalid_argument("defective set larger than max_defectives");
  for (ItemId v : defectives) {
    if (v < 1 || v > d.n_items)
      throw std::invalid_argument("defective item out of range 1..n_items");
  }
  OutputVector y;
  y.reserve(d.tests.size());
  for (const TestSeq& t : d.tests) y.push_back(run_test(t, defectives));
  return y;
}

DefectiveSet decode(const Design&, const OutputVector& y) {
  std::vector<ItemId> found;
  for (ItemId v : y) {
    if (v != 0) found.push_back(v);
  }
  return make_defective_set(std::move(found));
}

TestSeq compose(const TestSeq& s1, const TestSeq& s2) {
  if (s1.size() != s2.size())
    throw std::invalid_argument("compose: permutations of unequal length");
  const int n = static_cast<int>(s1.size());
  if (!is_full_permutation(s1, n) || !is_full_permutation(s2, n))
    throw std::invalid_argument("compose: inputs must be permutations of 1..n");
  TestSeq out;
  out.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (ItemId block : s1) {
    for (ItemId within : s2) out.push_back((block - 1) * n + within);
  }
  return out;
}

Design restrict_design(const Design& d, int m) {
  if (m < 1) throw std::invalid_argument("restrict_design: m must be >= 1");
  if (m > d.n_items)
    throw std::invalid_argument("restrict_design: m exceeds n_items");
  Design out;
  out.n_items = m;
  out.max_defectives = std::min(d.max_defectives, m);
  for (const TestSeq& t : d.tests) {
    TestSeq kept;
    for (ItemId v : t) {
      if (v <= m) kept.push_back(v);
    }
    if (!kept.empty()) out.tests.push_back(std::move(kept));
  }
  return dedupe_tests(out);
}

Design dedupe_tests(const Design& d) {
  Design out;
  out.n_items = d.n_items;
  out.max_defectives = d.max_defectives;
  std::set<TestSeq> seen;
  for (const TestSeq& t : d.tests) {
    if (seen.insert(t).second) out.tests.push_back(t);
  }
  return out;
}

Design parse_design(std::istream& in) {
  Design d;
  bool have_header = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      long long n = 0, k = 0;
      if (!(fields >> n >> k) || n < 1 || k < 1 || k > n)
        throw ParseError(lineno, "expected header 'N K' with 1 <= K <= N");
      std::string extra;
      if (fields >> extra) throw ParseError(lineno, "trailing tokens in header");
      d.n_items = static_cast<int>(n);
      d.max_defectives = static_cast<int>(k);
      have_header = true;
      continue;
    }
    TestSeq t;
    long long v = 0;
    while (fields >> v) {
      if (v < 1 || v > d.n_items)
        throw ParseError(lineno, "item index out of range 1..N");
      t.push_back(static_cast<ItemId>(v));
    }
    if (!fields.eof()) throw ParseError(lineno, "non-numeric token in test line");
    std::set<ItemId> seen(t.begin(), t.end());
    if (seen.size() != t.size())
      throw ParseError(lineno, "duplicate item within a test");
    d.tests.push_back(std::move(t));
  }
  if (!have_header) throw ParseError(lineno, "missing 'N K' header line");
  return d;
}

Design parse_design_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open design file: " + path);
  return parse_design(in);
}

std::string format_design(const Design& d,
                          const std::vector<std::string>& comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << "\n";
  out << d.n_items << ' ' << d.max_defectives << "\n";
  for (const TestSeq& t : d.tests) {
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) out << ' ';
      out << t[i];
    }
    out << "\n";
  }
  return out.str();
}

void write_design_file(const std::string& path, const Design& d,
                       const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << format_design(d, comments);
}

}  // namespace cascade
