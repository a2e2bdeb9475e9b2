#include "bslope/gluing.hpp"

#include <charconv>
#include <sstream>

namespace bslope {

ShapeParam edge_parameter(int edge_slot) {
  // slots 01,02,03,12,13,23; opposite pairs (01,23), (02,13), (03,12)
  switch (edge_slot) {
    case 0: case 5: return ShapeParam::Z;
    case 1: case 4: return ShapeParam::ZPrime;
    default: return ShapeParam::ZDoublePrime;
  }
}

EdgeExponentCounts count_exponents(const Triangulation& tri,
                                   const std::vector<EdgeClass>& classes) {
  EdgeExponentCounts ec;
  ec.classes = int(classes.size());
  ec.tets = tri.size();
  ec.counts.assign(size_t(ec.classes) * ec.tets, {0, 0, 0});
  for (const EdgeClass& cls : classes)
    for (auto [t, e] : cls.members)
      ec.counts[size_t(cls.id) * ec.tets + t][int(edge_parameter(e))]++;
  return ec;
}

FullExponentMatrix exponent_rows(const Triangulation& tri,
                                 const std::vector<EdgeClass>& classes) {
  EdgeExponentCounts ec = count_exponents(tri, classes);
  FullExponentMatrix full;
  full.mat = Mat<int64_t>(ec.classes, 2 * ec.tets);
  full.sign_parity.assign(ec.classes, 0);
  for (int i = 0; i < ec.classes; i++) {
    int pdp_total = 0;
    for (int t = 0; t < ec.tets; t++) {
      const auto& [p, pp, pdp] = ec.at(i, t);
      full.mat(i, 2 * t) = p - pdp;
      full.mat(i, 2 * t + 1) = pdp - pp;
      pdp_total += pdp;
    }
    full.sign_parity[i] = pdp_total & 1;
  }
  return full;
}

OmitSelector OmitSelector::parse(std::string_view text) {
  size_t colon = text.find(':');
  if (colon == std::string_view::npos) {
    int id = -1;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
    if (ec != std::errc() || p != text.data() + text.size())
      throw SelectorError("bad omit selector \"" + std::string(text) +
                          "\" (expected class id or tet:pair)");
    return by_id(id);
  }
  int tet = -1;
  auto head = text.substr(0, colon);
  auto [p, ec] = std::from_chars(head.data(), head.data() + head.size(), tet);
  int edge = edge_pair_from_name(text.substr(colon + 1));
  if (ec != std::errc() || p != head.data() + head.size() || edge < 0)
    throw SelectorError("bad omit selector \"" + std::string(text) + "\"");
  return by_member(tet, edge);
}

ExponentMatrix build_R(const Triangulation& tri,
                       const std::vector<EdgeClass>& classes,
                       const OmitSelector& omit) {
  int target = -1;
  if (auto* id = std::get_if<int>(&omit.sel)) {
    if (*id < 0 || *id >= int(classes.size()))
      throw SelectorError("omit selector: class id " + std::to_string(*id) +
                          " out of range");
    target = *id;
  } else {
    auto [tet, edge] = std::get<std::pair<int, int>>(omit.sel);
    if (tet < 0 || tet >= tri.size() || edge < 0 || edge > 5)
      throw SelectorError("omit selector: member " + std::to_string(tet) + ":" +
                          (edge >= 0 && edge < 6 ? edge_pair_name(edge) : "??") +
                          " out of range");
    for (const EdgeClass& cls : classes)
      if (cls.contains(tet, edge)) { target = cls.id; break; }
    if (target < 0)
      throw SelectorError("omit selector matches no edge class");
  }

  FullExponentMatrix full = exponent_rows(tri, classes);
  ExponentMatrix R;
  R.tets = tri.size();
  R.omitted_class = target;
  R.omitted_member = classes[target].members.front();
  R.rows = Mat<int64_t>(full.mat.rows - 1, full.mat.cols);
  int out = 0;
  for (int i = 0; i < full.mat.rows; i++) {
    if (i == target) continue;
    for (int j = 0; j < full.mat.cols; j++) R.rows(out, j) = full.mat(i, j);
    R.row_class.push_back(i);
    R.sign_parity.push_back(full.sign_parity[i]);
    out++;
  }
  return R;
}

std::string dump_matrix(const ExponentMatrix& R) {
  std::ostringstream os;
  os << "# omitted edge class " << R.omitted_class << " (member "
     << R.omitted_member.first << ":" << edge_pair_name(R.omitted_member.second)
     << ")\n";
  for (int i = 0; i < R.rows.rows; i++) {
    for (int j = 0; j < R.rows.cols; j++) {
      if (j) os << ' ';
      os << R.rows(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace bslope
