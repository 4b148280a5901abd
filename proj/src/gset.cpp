#include "burnside/gset.hpp"

#include <algorithm>
#include <stdexcept>

namespace burnside {

namespace {
int position_in(const Subgroup& s, int elem) {
  auto it = std::lower_bound(s.elements.begin(), s.elements.end(), elem);
  if (it == s.elements.end() || *it != elem)
    throw std::invalid_argument("element lies outside the acting subgroup");
  return static_cast<int>(it - s.elements.begin());
}
}  // namespace

int GSet::apply(int elem, int point) const {
  return table[position_in(lat->at(acting), elem)][point];
}

void GSet::check_valid() const {
  const Subgroup& s = lat->at(acting);
  const FiniteGroup& g = lat->group();
  if (static_cast<int>(table.size()) != s.order)
    throw std::logic_error("action table has wrong number of rows");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != size)
      throw std::logic_error("action table has wrong row length");
    for (int v : row)
      if (v < 0 || v >= size) throw std::logic_error("action image out of range");
  }
  for (int x = 0; x < size; ++x)
    if (table[0][x] != x) throw std::logic_error("identity does not act trivially");
  for (int a = 0; a < s.order; ++a) {
    for (int b = 0; b < s.order; ++b) {
      const int ab = position_in(s, g.mul(s.elements[a], s.elements[b]));
      for (int x = 0; x < size; ++x)
        if (table[a][table[b][x]] != table[ab][x])
          throw std::logic_error("action is not compatible with multiplication");
    }
  }
}

int GSet::stabilizer(int point) const {
  const Subgroup& s = lat->at(acting);
  std::vector<int> elems;
  for (int pos = 0; pos < s.order; ++pos)
    if (table[pos][point] == point) elems.push_back(s.elements[pos]);
  const int id = lat->id_of_elements(elems);
  if (id < 0) throw std::logic_error("stabilizer missing from the lattice");
  return id;
}

std::vector<std::vector<int>> GSet::orbits() const {
  std::vector<char> seen(size, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < size; ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    for (const auto& row : table) {
      const int y = row[x];
      if (!std::exchange(seen[y], 1)) orbit.push_back(y);
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

long GSet::fixed_points(int subgroup_id) const {
  const Subgroup& s = lat->at(acting);
  if (!lat->contains(acting, subgroup_id))
    throw std::invalid_argument("fixed points need a subgroup of the acting group");
  const std::vector<int>& gens = lat->at(subgroup_id).gens;
  std::vector<int> rows;
  for (int e : gens) rows.push_back(position_in(s, e));
  long count = 0;
  for (int x = 0; x < size; ++x) {
    bool fixed = true;
    for (int r : rows) {
      if (table[r][x] != x) {
        fixed = false;
        break;
      }
    }
    if (fixed) ++count;
  }
  return count;
}

GSet trivial_gset(const SubgroupLattice& lat, int acting, int n) {
  GSet x;
  x.lat = &lat;
  x.acting = acting;
  x.size = n;
  std::vector<int> row(n);
  for (int i = 0; i < n; ++i) row[i] = i;
  x.table.assign(lat.at(acting).order, row);
  return x;
}

GSet coset_gset(const SubgroupLattice& lat, int acting, int k) {
  if (!lat.contains(acting, k))
    throw std::invalid_argument("coset space needs K inside the acting group");
  const FiniteGroup& g = lat.group();
  const Subgroup& host = lat.at(acting);
  const Subgroup& ks = lat.at(k);
  const std::vector<int> reps = lat.left_coset_reps(k, acting);
  std::vector<int> coset_of(g.order(), -1);
  for (size_t j = 0; j < reps.size(); ++j)
    for (int ke : ks.elements) coset_of[g.mul(reps[j], ke)] = static_cast<int>(j);
  GSet x;
  x.lat = &lat;
  x.acting = acting;
  x.size = static_cast<int>(reps.size());
  x.table.assign(host.order, std::vector<int>(x.size));
  for (int pos = 0; pos < host.order; ++pos)
    for (int j = 0; j < x.size; ++j)
      x.table[pos][j] = coset_of[g.mul(host.elements[pos], reps[j])];
  return x;
}

GSet disjoint_union(const GSet& a, const GSet& b) {
  if (a.lat != b.lat || a.acting != b.acting)
    throw std::invalid_argument("disjoint union needs a common acting group");
  GSet x;
  x.lat = a.lat;
  x.acting = a.acting;
  x.size = a.size + b.size;
  x.table.resize(a.table.size());
  for (size_t pos = 0; pos < a.table.size(); ++pos) {
    x.table[pos] = a.table[pos];
    for (int v : b.table[pos]) x.table[pos].push_back(a.size + v);
  }
  return x;
}

GSet product_gset(const GSet& a, const GSet& b) {
  if (a.lat != b.lat || a.acting != b.acting)
    throw std::invalid_argument("product needs a common acting group");
  GSet x;
  x.lat = a.lat;
  x.acting = a.acting;
  x.size = a.size * b.size;
  x.table.resize(a.table.size());
  for (size_t pos = 0; pos < a.table.size(); ++pos) {
    x.table[pos].resize(x.size);
    for (int i = 0; i < a.size; ++i)
      for (int j = 0; j < b.size; ++j)
        x.table[pos][i * b.size + j] = a.table[pos][i] * b.size + b.table[pos][j];
  }
  return x;
}

GSet coinduce(const GSet& x, int h) {
  const SubgroupLattice& lat = *x.lat;
  const FiniteGroup& g = lat.group();
  const int k = x.acting;
  if (!lat.contains(h, k))
    throw std::invalid_argument("coinduce target does not contain the acting group");
  const Subgroup& hs = lat.at(h);
  const Subgroup& ks = lat.at(k);
  const std::vector<int> reps = lat.right_coset_reps(k, h);
  const int m = static_cast<int>(reps.size());

  std::vector<int> coset_of(g.order(), -1);
  for (int j = 0; j < m; ++j)
    for (int ke : ks.elements) coset_of[g.mul(ke, reps[j])] = j;

  long points = 1;
  for (int i = 0; i < m; ++i) {
    points *= x.size;
    if (points > 10'000'000)
      throw std::invalid_argument("coinduced set would be too large");
  }

  GSet out;
  out.lat = &lat;
  out.acting = h;
  out.size = static_cast<int>(points);
  out.table.assign(hs.order, std::vector<int>(out.size));

  // Tuples over the cosets K\H, coordinate i belonging to rep reps[i];
  // point index is the base-|X| expansion with coordinate 0 most significant,
  // so points run in lexicographic tuple order.
  std::vector<long> weight(m, 1);
  for (int i = m - 2; i >= 0; --i) weight[i] = weight[i + 1] * x.size;

  std::vector<int> jmap(m), krow(m), digits(m);
  for (int pos = 0; pos < hs.order; ++pos) {
    const int he = hs.elements[pos];
    for (int i = 0; i < m; ++i) {
      const int gi = g.mul(reps[i], he);
      const int j = coset_of[gi];
      const int kelem = g.mul(gi, g.inv(reps[j]));
      jmap[i] = j;
      krow[i] = position_in(ks, kelem);
    }
    for (long pt = 0; pt < points; ++pt) {
      long rest = pt;
      for (int i = 0; i < m; ++i) {
        digits[i] = static_cast<int>(rest / weight[i]);
        rest %= weight[i];
      }
      long image = 0;
      for (int i = 0; i < m; ++i)
        image += static_cast<long>(x.table[krow[i]][digits[jmap[i]]]) * weight[i];
      out.table[pos][pt] = static_cast<int>(image);
    }
  }
  return out;
}

void EquivariantMap::check_equivariant() const {
  if (!from || !to || from->lat != to->lat || from->acting != to->acting)
    throw std::invalid_argument("map endpoints must share an acting group");
  if (static_cast<int>(point_map.size()) != from->size)
    throw std::invalid_argument("point map has wrong length");
  for (int v : point_map)
    if (v < 0 || v >= to->size)
      throw std::invalid_argument("point map image out of range");
  for (size_t pos = 0; pos < from->table.size(); ++pos)
    for (int x = 0; x < from->size; ++x)
      if (to->table[pos][point_map[x]] != point_map[from->table[pos][x]])
        throw std::invalid_argument("point map is not equivariant");
}

}  // namespace burnside
