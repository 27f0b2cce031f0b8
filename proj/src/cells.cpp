#include "omegacat/cells.hpp"

#include <algorithm>

namespace omegacat {

void ValidationReport::add(std::string law, std::vector<std::string> witness,
                           std::string detail) {
  violations.push_back({std::move(law), std::move(witness), std::move(detail)});
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  for (const auto& [law, n] : other.counts) counts[law] += n;
}

const CellRecord& CategoryPresentation::record(const CellId& id) const {
  auto it = cells.find(id);
  if (it == cells.end()) throw domain_error("unknown cell '" + id + "' in '" + name + "'");
  return it->second;
}

std::vector<CellId> CategoryPresentation::cells_of_degree(int d) const {
  std::vector<CellId> out;
  for (const auto& [id, rec] : cells)
    if (rec.degree == d) out.push_back(id);
  return out;
}

void CategoryPresentation::check_wellformed() const {
  if (truncation < 0) throw malformed_error(name + ": negative truncation");
  for (const auto& [id, rec] : cells) {
    if (id != rec.id) throw malformed_error(name + ": record key/id mismatch at '" + id + "'");
    if (rec.degree < 0) throw malformed_error(name + ": negative degree at '" + id + "'");
    if (rec.degree > truncation)
      throw malformed_error(name + ": cell '" + id + "' above truncation");
    if ((rec.degree == 0) != (!rec.dom.has_value()) || (rec.degree == 0) != (!rec.cod.has_value()))
      throw malformed_error(name + ": boundary presence/degree mismatch at '" + id + "'");
    if (rec.degree > 0) {
      auto d = cells.find(*rec.dom);
      auto c = cells.find(*rec.cod);
      if (d == cells.end()) throw malformed_error(name + ": dangling dom '" + *rec.dom + "' at '" + id + "'");
      if (c == cells.end()) throw malformed_error(name + ": dangling cod '" + *rec.cod + "' at '" + id + "'");
      if (d->second.degree != rec.degree - 1 || c->second.degree != rec.degree - 1)
        throw malformed_error(name + ": boundary degree mismatch at '" + id + "'");
    }
    if (rec.identity_of) {
      auto z = cells.find(*rec.identity_of);
      if (z == cells.end())
        throw malformed_error(name + ": dangling identity_of at '" + id + "'");
      if (z->second.degree != rec.degree - 1)
        throw malformed_error(name + ": identity degree mismatch at '" + id + "'");
      auto im = identity_map.find(*rec.identity_of);
      if (im == identity_map.end() || im->second != id)
        throw malformed_error(name + ": identity_map disagrees with identity_of at '" + id + "'");
    }
  }
  for (const auto& [z, ez] : identity_map) {
    auto zi = cells.find(z);
    auto ei = cells.find(ez);
    if (zi == cells.end() || ei == cells.end())
      throw malformed_error(name + ": dangling identity_map entry " + z + " -> " + ez);
    if (zi->second.degree >= truncation)
      throw malformed_error(name + ": identity_map entry at or above truncation for '" + z + "'");
    if (!ei->second.identity_of || *ei->second.identity_of != z)
      throw malformed_error(name + ": cell '" + ez + "' not marked as identity of '" + z + "'");
  }
  // identity_map totality on cells of degree < truncation
  for (const auto& [id, rec] : cells)
    if (rec.degree < truncation && !identity_map.count(id))
      throw malformed_error(name + ": missing identity cell for '" + id + "'");
  for (const auto& [key, res] : composition) {
    if (!cells.count(key.left) || !cells.count(key.right) || !cells.count(res))
      throw malformed_error(name + ": dangling id in composition table");
    if (key.k < 1) throw malformed_error(name + ": composition depth < 1");
  }
}

VirtualCell CategoryPresentation::normalize(VirtualCell v) const {
  while (v.epower > 0) {
    auto it = identity_map.find(v.cell);
    if (it == identity_map.end()) break;  // base at truncation level
    v.cell = it->second;
    --v.epower;
  }
  (void)record(v.cell);
  return v;
}

int CategoryPresentation::vdegree(const VirtualCell& v) const {
  return record(v.cell).degree + v.epower;
}

VirtualCell CategoryPresentation::videntity(const VirtualCell& v, int k) const {
  return normalize({v.cell, v.epower + k});
}

VirtualCell CategoryPresentation::vdom(const VirtualCell& v) const {
  if (v.epower > 0) return {v.cell, v.epower - 1};
  const auto& rec = record(v.cell);
  if (!rec.dom) throw domain_error("dom of object '" + v.cell + "'");
  return {*rec.dom, 0};
}

VirtualCell CategoryPresentation::vcod(const VirtualCell& v) const {
  if (v.epower > 0) return {v.cell, v.epower - 1};
  const auto& rec = record(v.cell);
  if (!rec.cod) throw domain_error("cod of object '" + v.cell + "'");
  return {*rec.cod, 0};
}

VirtualCell CategoryPresentation::vdom(const VirtualCell& v, int k) const {
  VirtualCell out = v;
  for (int i = 0; i < k; ++i) out = vdom(out);
  return out;
}

VirtualCell CategoryPresentation::vcod(const VirtualCell& v, int k) const {
  VirtualCell out = v;
  for (int i = 0; i < k; ++i) out = vcod(out);
  return out;
}

bool CategoryPresentation::is_identity(const VirtualCell& v) const {
  return v.epower > 0 || record(v.cell).identity_of.has_value();
}

std::optional<VirtualCell> CategoryPresentation::try_compose(int k, VirtualCell f,
                                                             VirtualCell g) const {
  f = normalize(f);
  g = normalize(g);
  const int deg = vdegree(f);
  if (k < 1 || k > deg || vdegree(g) != deg) return std::nullopt;
  if (!(vdom(f, k) == vcod(g, k))) return std::nullopt;
  if (f.epower == 0 && g.epower == 0) {
    auto it = composition.find({k, f.cell, g.cell});
    if (it == composition.end()) return std::nullopt;
    return VirtualCell{it->second, 0};
  }
  // Both virtual with the same epower j = deg - truncation.
  const int j = f.epower;
  if (k <= j) return f;  // f == g forced by the boundary condition; unit law
  auto base = try_compose(k - j, {f.cell, 0}, {g.cell, 0});
  if (!base) return std::nullopt;
  return videntity(*base, j);
}

std::vector<CellId> CategoryPresentation::hom_cells(const CellId& x, const CellId& y,
                                                    int r) const {
  std::vector<CellId> out;
  const int q = degree_of(x);
  if (degree_of(y) != q) throw domain_error("hom_cells: degree mismatch of '" + x + "', '" + y + "'");
  const int d = q + 1 + r;
  if (r < 0 || d > truncation) return out;
  for (const auto& [id, rec] : cells) {
    if (rec.degree != d) continue;
    VirtualCell w{id, 0};
    if (vdom(w, r + 1) == VirtualCell{x, 0} && vcod(w, r + 1) == VirtualCell{y, 0})
      out.push_back(id);
  }
  return out;
}

std::vector<CellId> CategoryPresentation::hom_cells(const CellId& x, const CellId& y) const {
  std::vector<CellId> out;
  for (int r = 0; r <= truncation - degree_of(x) - 1; ++r) {
    auto layer = hom_cells(x, y, r);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::string to_string(const VirtualCell& v) {
  if (v.epower == 0) return v.cell;
  return "e^" + std::to_string(v.epower) + "(" + v.cell + ")";
}

}  // namespace omegacat
