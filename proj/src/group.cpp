#include "burnside/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace burnside {

Perm identity_perm(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

std::string cycle_string(const Perm& p) {
  const int n = static_cast<int>(p.size());
  std::vector<char> seen(n, 0);
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

namespace {

std::string pack_perm(const Perm& p) {
  std::string key;
  key.reserve(p.size() * 2);
  for (int v : p) {
    key += static_cast<char>(v & 0xff);
    key += static_cast<char>((v >> 8) & 0xff);
  }
  return key;
}

std::string strip(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

}  // namespace

std::vector<Perm> parse_generators(const std::string& text, int degree) {
  // First pass: tokenize into cycles per generator.
  std::vector<std::vector<std::vector<int>>> gens_cycles;
  std::vector<std::vector<int>> cur_cycles;
  size_t i = 0;
  const std::string s = text;
  int max_point = 0;
  auto flush_gen = [&]() {
    gens_cycles.push_back(cur_cycles);
    cur_cycles.clear();
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == ';') {
      flush_gen();
      ++i;
    } else if (c == '(') {
      ++i;
      std::vector<int> cycle;
      while (true) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == ')') {
          ++i;
          break;
        }
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw GroupSpecError("malformed cycle notation near '" + s.substr(start, 8) + "'");
        int pt = std::stoi(s.substr(start, i - start));
        if (pt < 1) throw GroupSpecError("cycle points are 1-based");
        cycle.push_back(pt - 1);
        max_point = std::max(max_point, pt);
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == ',') {
          ++i;
        } else if (i < s.size() && s[i] == ')') {
          ++i;
          break;
        } else {
          throw GroupSpecError("malformed cycle notation: expected ',' or ')'");
        }
      }
      std::set<int> dedup(cycle.begin(), cycle.end());
      if (dedup.size() != cycle.size())
        throw GroupSpecError("cycle repeats a point");
      cur_cycles.push_back(cycle);
    } else {
      throw GroupSpecError(std::string("unexpected character '") + c + "' in generator list");
    }
  }
  flush_gen();
  while (!gens_cycles.empty() && gens_cycles.back().empty()) gens_cycles.pop_back();
  if (degree < 0) degree = std::max(max_point, 1);
  if (max_point > degree)
    throw GroupSpecError("cycle mentions point " + std::to_string(max_point) +
                         " beyond degree " + std::to_string(degree));
  std::vector<Perm> out;
  for (const auto& cycles : gens_cycles) {
    Perm g = identity_perm(degree);
    for (const auto& cycle : cycles) {
      Perm c = identity_perm(degree);
      for (size_t k = 0; k < cycle.size(); ++k)
        c[cycle[k]] = cycle[(k + 1) % cycle.size()];
      g = compose(c, g);  // cycles apply left to right
    }
    out.push_back(g);
  }
  return out;
}

FiniteGroup FiniteGroup::from_generators(std::string label, int degree,
                                         const std::vector<Perm>& gens,
                                         int max_order) {
  FiniteGroup g;
  g.label_ = std::move(label);
  g.degree_ = degree;
  for (const auto& p : gens)
    if (static_cast<int>(p.size()) != degree)
      throw GroupSpecError("generator degree mismatch");

  g.elems_.push_back(identity_perm(degree));
  g.index_[pack_perm(g.elems_[0])] = 0;
  // Breadth-first closure; new elements of each level are sorted by image
  // tuple so the numbering does not depend on discovery order.
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<Perm> fresh;
    for (int f : frontier) {
      for (const auto& s : gens) {
        Perm w = compose(g.elems_[f], s);
        const std::string key = pack_perm(w);
        if (g.index_.count(key)) continue;
        g.index_[key] = -1;  // reserve; real index assigned after sorting
        fresh.push_back(std::move(w));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    frontier.clear();
    for (auto& w : fresh) {
      if (static_cast<int>(g.elems_.size()) >= max_order)
        throw GroupCapError("group order exceeds cap " + std::to_string(max_order) +
                            " (spec '" + g.label_ + "')");
      int id = static_cast<int>(g.elems_.size());
      g.index_[pack_perm(w)] = id;
      g.elems_.push_back(std::move(w));
      frontier.push_back(id);
    }
  }

  const int n = g.order();
  g.mul_.resize(static_cast<size_t>(n) * n);
  g.inv_.resize(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      g.mul_[static_cast<size_t>(a) * n + b] = g.index_.at(pack_perm(compose(g.elems_[a], g.elems_[b])));
  for (int a = 0; a < n; ++a) g.inv_[a] = g.index_.at(pack_perm(inverse_perm(g.elems_[a])));

  for (const auto& s : gens) {
    int id = g.index_.at(pack_perm(s));
    if (id != 0 && std::find(g.gens_.begin(), g.gens_.end(), id) == g.gens_.end())
      g.gens_.push_back(id);
  }
  return g;
}

int FiniteGroup::power(int a, long n) const {
  int r = identity();
  int base = a;
  long e = n;
  if (e < 0) {
    base = inv(a);
    e = -e;
  }
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int FiniteGroup::index_of(const Perm& p) const {
  auto it = index_.find(pack_perm(p));
  return it == index_.end() ? -1 : it->second;
}

namespace {

struct NamedGens {
  int degree;
  std::vector<Perm> gens;
};

Perm full_cycle(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

NamedGens named_atom(const std::string& atom) {
  if (atom.size() < 2) throw GroupSpecError("unknown group name '" + atom + "'");
  const char kind = atom[0];
  for (size_t i = 1; i < atom.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(atom[i])))
      throw GroupSpecError("unknown group name '" + atom + "'");
  const int n = std::stoi(atom.substr(1));
  switch (kind) {
    case 'C': {
      if (n < 1) throw GroupSpecError("C<n> needs n >= 1");
      if (n == 1) return {1, {}};
      return {n, {full_cycle(n)}};
    }
    case 'S': {
      if (n < 1) throw GroupSpecError("S<n> needs n >= 1");
      if (n == 1) return {1, {}};
      Perm t = identity_perm(n);
      t[0] = 1;
      t[1] = 0;
      if (n == 2) return {2, {t}};
      return {n, {t, full_cycle(n)}};
    }
    case 'A': {
      if (n < 1) throw GroupSpecError("A<n> needs n >= 1");
      if (n <= 2) return {std::max(n, 1), {}};
      Perm t = identity_perm(n);
      t[0] = 1;
      t[1] = 2;
      t[2] = 0;
      if (n == 3) return {3, {t}};
      Perm c(n);
      if (n % 2 == 1) {
        c = full_cycle(n);
      } else {
        c = identity_perm(n);
        for (int i = 1; i < n; ++i) c[i] = (i % (n - 1)) + 1;
      }
      return {n, {t, c}};
    }
    case 'D': {
      if (n < 2 || n % 2 != 0)
        throw GroupSpecError("D<m> is the dihedral group of order m; m must be even");
      if (n == 2) {
        Perm t = identity_perm(2);
        t[0] = 1;
        t[1] = 0;
        return {2, {t}};
      }
      if (n == 4) {
        Perm a = identity_perm(4), b = identity_perm(4);
        a[0] = 1; a[1] = 0;
        b[2] = 3; b[3] = 2;
        return {4, {a, b}};
      }
      const int m = n / 2;  // polygon vertices
      Perm r = full_cycle(m);
      Perm s(m);
      for (int i = 0; i < m; ++i) s[i] = (m - i) % m;
      return {m, {r, s}};
    }
    case 'Q': {
      if (n != 8) throw GroupSpecError("only Q8 is supported");
      // Left regular action on {1,-1,i,-i,j,-j,k,-k}.
      Perm qi = {2, 3, 1, 0, 6, 7, 5, 4};
      Perm qj = {4, 5, 7, 6, 1, 0, 2, 3};
      return {8, {qi, qj}};
    }
    default:
      throw GroupSpecError("unknown group name '" + atom + "'");
  }
}

}  // namespace

FiniteGroup build_group(const std::string& spec, int max_order) {
  const std::string s = strip(spec);
  if (s.empty()) throw GroupSpecError("empty group spec");
  if (s.find('(') != std::string::npos) {
    auto gens = parse_generators(s);
    int degree = gens.empty() ? 1 : static_cast<int>(gens[0].size());
    return FiniteGroup::from_generators(s, degree, gens, max_order);
  }

  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == 'x') {
      parts.push_back(strip(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  std::vector<NamedGens> factors;
  int degree = 0;
  for (const auto& part : parts) {
    if (part.empty()) throw GroupSpecError("empty factor in product spec '" + s + "'");
    factors.push_back(named_atom(part));
    degree += factors.back().degree;
  }
  std::vector<Perm> gens;
  int offset = 0;
  for (const auto& f : factors) {
    for (const auto& p : f.gens) {
      Perm g = identity_perm(degree);
      for (int i = 0; i < f.degree; ++i) g[offset + i] = offset + p[i];
      gens.push_back(g);
    }
    offset += f.degree;
  }
  return FiniteGroup::from_generators(s, std::max(degree, 1), gens, max_order);
}

}  // namespace burnside
