// Copyright 2026 The spinsym Authors.
// SPDX-License-Identifier: Apache-2.0

#include "spinsym/spacegroup.hpp"

#include "spinsym/errors.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

namespace spinsym {

FiniteLattice::FiniteLattice(int dims, int linear_size) : dims_(dims), linear_size_(linear_size) {
  if (dims < 1) throw InvalidInput("lattice dimension must be >= 1");
  if (linear_size < 2) throw InvalidInput("linear size must be >= 2, got " + std::to_string(linear_size));
  std::int64_t n = 1;
  for (int k = 0; k < dims; ++k) {
    n *= linear_size;
    if (n > 64) throw ResourceLimit("lattice has more than 64 sites");
  }
  n_sites_ = static_cast<int>(n);

  std::set<Bond> unique;
  for (int s = 0; s < n_sites_; ++s) {
    auto x = coordinates(s);
    for (int axis = 0; axis < dims_; ++axis) {
      auto y = x;
      y[axis] = (y[axis] + 1) % linear_size_;
      const int t = site(y);
      unique.insert({std::min(s, t), std::max(s, t)});
    }
  }
  bonds_.assign(unique.begin(), unique.end());
}

std::vector<int> FiniteLattice::coordinates(int s) const {
  std::vector<int> x(dims_);
  for (int k = 0; k < dims_; ++k) {
    x[k] = s % linear_size_;
    s /= linear_size_;
  }
  return x;
}

int FiniteLattice::site(std::span<const int> coords) const {
  int s = 0;
  for (int k = dims_ - 1; k >= 0; --k) s = s * linear_size_ + coords[k];
  return s;
}

bool FiniteLattice::has_bond(int a, int b) const noexcept {
  const Bond key{std::min(a, b), std::max(a, b)};
  return std::binary_search(bonds_.begin(), bonds_.end(), key);
}

int FiniteLattice::sublattice_sign(int s) const {
  int parity = 0;
  for (int x : coordinates(s)) parity += x;
  return parity % 2 == 0 ? 1 : -1;
}

bool FiniteLattice::is_bipartite() const noexcept {
  return std::all_of(bonds_.begin(), bonds_.end(),
                     [&](const Bond& bond) { return sublattice_sign(bond.a) != sublattice_sign(bond.b); });
}

std::vector<int> FiniteLattice::graph_distances() const {
  std::vector<std::vector<int>> adjacency(n_sites_);
  for (const Bond& bond : bonds_) {
    adjacency[bond.a].push_back(bond.b);
    adjacency[bond.b].push_back(bond.a);
  }
  std::vector<int> dist(static_cast<std::size_t>(n_sites_) * n_sites_, -1);
  for (int source = 0; source < n_sites_; ++source) {
    int* row = dist.data() + static_cast<std::size_t>(source) * n_sites_;
    std::deque<int> queue{source};
    row[source] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adjacency[u])
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
    }
  }
  return dist;
}

std::string FiniteLattice::spec() const {
  const std::string l = std::to_string(linear_size_);
  switch (dims_) {
    case 1:
      return "chain:" + l;
    case 2:
      return "square:" + l + "x" + l;
    case 3:
      return "cube:" + l + "x" + l + "x" + l;
    default: {
      std::string out = "hypercube" + std::to_string(dims_) + ":" + l;
      for (int k = 1; k < dims_; ++k) out += "x" + l;
      return out;
    }
  }
}

FiniteLattice build_lattice(int dims, int linear_size) { return FiniteLattice(dims, linear_size); }

FiniteLattice parse_lattice(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw InvalidInput("lattice spec needs 'kind:size', got '" + std::string(spec) + "'");
  const std::string_view kind = spec.substr(0, colon);
  std::string_view sizes = spec.substr(colon + 1);
  int dims = 0;
  if (kind == "chain")
    dims = 1;
  else if (kind == "square")
    dims = 2;
  else if (kind == "cube")
    dims = 3;
  else
    throw InvalidInput("unknown lattice kind '" + std::string(kind) + "'");

  std::vector<int> lengths;
  while (true) {
    const auto x = sizes.find('x');
    const auto part = sizes.substr(0, x);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw InvalidInput("bad lattice size in '" + std::string(spec) + "'");
    lengths.push_back(value);
    if (x == std::string_view::npos) break;
    sizes = sizes.substr(x + 1);
  }
  if (static_cast<int>(lengths.size()) != dims)
    throw InvalidInput("'" + std::string(kind) + "' needs " + std::to_string(dims) + " sizes");
  if (std::adjacent_find(lengths.begin(), lengths.end(), std::not_equal_to<>()) != lengths.end())
    throw InvalidInput("all linear sizes must be equal in '" + std::string(spec) + "'");
  return FiniteLattice(dims, lengths.front());
}

// ---------------------------------------------------------------------------

SpaceGroup::SpaceGroup(FiniteLattice lattice, std::vector<SpaceGroupElement> elements, std::uint64_t abstract_order)
    : lattice_(std::move(lattice)), elements_(std::move(elements)), abstract_order_(abstract_order) {}

std::uint64_t wreath_order(int dims, int linear_size) {
  std::uint64_t order = 1;
  for (int k = 0; k < dims; ++k) order *= 2 * static_cast<std::uint64_t>(linear_size);
  for (int k = 2; k <= dims; ++k) order *= static_cast<std::uint64_t>(k);
  return order;
}

std::vector<int> wreath_permutation(const FiniteLattice& lattice, const WreathFactors& f) {
  const int d = lattice.dims();
  const int L = lattice.linear_size();
  std::vector<int> perm(lattice.n_sites());
  std::vector<int> y(d);
  for (int s = 0; s < lattice.n_sites(); ++s) {
    const auto x = lattice.coordinates(s);
    for (int j = 0; j < d; ++j) {
      const int i = f.axis_perm[j];  // x_j feeds y_i, i.e. j = pi^{-1}(i)
      const int moved = f.reflection[i] ? -x[j] : x[j];
      y[i] = ((f.translation[i] + moved) % L + L) % L;
    }
    perm[s] = lattice.site(y);
  }
  return perm;
}

SpaceGroup build_space_group(const FiniteLattice& lattice) {
  const int d = lattice.dims();
  const int L = lattice.linear_size();
  std::vector<SpaceGroupElement> elements;
  std::set<std::vector<int>> seen;

  std::vector<int> axis_perm(d);
  std::iota(axis_perm.begin(), axis_perm.end(), 0);
  std::uint64_t translations = 1;
  for (int k = 0; k < d; ++k) translations *= static_cast<std::uint64_t>(L);

  do {
    for (int mask = 0; mask < (1 << d); ++mask) {
      for (std::uint64_t tcode = 0; tcode < translations; ++tcode) {
        WreathFactors f{std::vector<int>(d), std::vector<int>(d), axis_perm};
        std::uint64_t rest = tcode;
        for (int k = 0; k < d; ++k) {
          f.translation[k] = static_cast<int>(rest % L);
          rest /= L;
          f.reflection[k] = (mask >> k) & 1;
        }
        auto perm = wreath_permutation(lattice, f);
        if (!seen.insert(perm).second) continue;
        for (const Bond& bond : lattice.bonds())
          if (!lattice.has_bond(perm[bond.a], perm[bond.b]))
            throw Error("space-group element does not preserve the bond set");
        elements.push_back({std::move(perm), std::move(f)});
      }
    }
  } while (std::next_permutation(axis_perm.begin(), axis_perm.end()));

  return SpaceGroup(lattice, std::move(elements), wreath_order(d, L));
}

SpinConfiguration act(const SpaceGroupElement& element, const SpinConfiguration& config) {
  if (config.size() != element.perm.size())
    throw InvalidInput("configuration length does not match the group's site count");
  std::vector<int> out(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) out[element.perm[i]] = config.digit(i);
  return SpinConfiguration(std::move(out), config.spin());
}

Code act(std::span<const int> perm, Code code, const ConfigCodec& codec) {
  Code out = 0;
  const int n = codec.n_sites();
  for (int site = n - 1; site >= 0; --site) {
    out += (code % codec.base()) * codec.place(perm[site]);
    code /= codec.base();
  }
  return out;
}

OrbitDecomposition orbit_decomposition(const SpaceGroup& group, const MagnetizationSector& sector,
                                       std::span<const Code> codes) {
  if (group.lattice().n_sites() != sector.n_sites())
    throw InvalidInput("group and sector have different site counts");
  constexpr auto kUnassigned = static_cast<std::uint32_t>(-1);
  OrbitDecomposition result;
  result.orbit_of.assign(codes.size(), kUnassigned);
  const ConfigCodec& codec = sector.codec();

  // the first unassigned code in increasing order is the minimum of its orbit
  for (std::size_t index = 0; index < codes.size(); ++index) {
    if (result.orbit_of[index] != kUnassigned) continue;
    const auto id = static_cast<std::uint32_t>(result.orbits.size());
    Orbit orbit{codes[index], {}};
    for (const auto& element : group.elements()) {
      const std::size_t image = sector.rank_code(act(element.perm, codes[index], codec));
      if (result.orbit_of[image] == kUnassigned) {
        result.orbit_of[image] = id;
        orbit.members.push_back(image);
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    result.orbits.push_back(std::move(orbit));
  }
  return result;
}

}  // namespace spinsym
