#include "bslope/triangulation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bslope {

namespace {

// Image of face slot f under the gluing map: the slot spanned by the
// images of f's vertices.
int image_face(int f, const Perm4& map) {
  int missing = face_missing_vertex(f);
  return face_index_missing(map[missing]);
}

std::string slot_name(int tet, int f) {
  const auto& fv = kFaceVertices[f];
  std::ostringstream os;
  os << "tet " << tet << " face " << fv[0] << fv[1] << fv[2];
  return os.str();
}

}  // namespace

bool EdgeClass::contains(int tet, int edge) const {
  return std::find(members.begin(), members.end(),
                   std::make_pair(tet, edge)) != members.end();
}

Triangulation::Triangulation(std::vector<Tetrahedron> tets)
    : tets_(std::move(tets)) {
  const int n = int(tets_.size());
  if (n == 0) throw ValidationError("empty triangulation");
  for (int t = 0; t < n; t++) {
    for (int f = 0; f < 4; f++) {
      const FaceGluing& g = tets_[t].face[f];
      if (g.target_tet < 0 || g.target_tet >= n)
        throw ValidationError("target tetrahedron out of range at " +
                              slot_name(t, f));
      int G = image_face(f, g.vertex_map);
      const FaceGluing& h = tets_[g.target_tet].face[G];
      if (h.target_tet != t || !(h.vertex_map == g.vertex_map.inverse()))
        throw ValidationError("involution violated at " + slot_name(t, f) +
                              " glued to " + slot_name(g.target_tet, G));
      if (g.target_tet == t && G == f) {
        // face glued to itself: the stored map must be its own inverse and
        // may not fix any vertex of the face
        if (g.vertex_map.is_identity())
          throw ValidationError("identity self-gluing at " + slot_name(t, f));
        for (int v : kFaceVertices[f])
          if (g.vertex_map[v] == v)
            throw ValidationError("self-gluing fixes vertex " +
                                  std::to_string(v) + " at " + slot_name(t, f));
      }
    }
  }
}

Triangulation parse_triangulation(std::string_view text) {
  std::vector<std::pair<int, Tetrahedron>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    lineno++;
    size_t pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;

    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head.empty() || head.back() != ':')
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected \"<tet>:\" prefix");
    int tet;
    try {
      tet = std::stoi(head.substr(0, head.size() - 1));
    } catch (...) {
      throw ParseError("line " + std::to_string(lineno) + ": bad tetrahedron index");
    }

    Tetrahedron T;
    for (int f = 0; f < 4; f++) {
      std::string tok;
      if (!(ls >> tok))
        throw ParseError("line " + std::to_string(lineno) + ": tet " +
                         std::to_string(tet) + " has a face never glued (only " +
                         std::to_string(f) + " of 4 gluings)");
      size_t open = tok.find('(');
      if (open == std::string::npos || tok.size() != open + 5 || tok.back() != ')')
        throw ParseError("line " + std::to_string(lineno) + ": bad token \"" + tok +
                         "\" at " + slot_name(tet, f));
      int target;
      try {
        target = std::stoi(tok.substr(0, open));
      } catch (...) {
        throw ParseError("line " + std::to_string(lineno) + ": bad token \"" + tok + "\"");
      }
      int d[3];
      for (int i = 0; i < 3; i++) {
        char c = tok[open + 1 + i];
        if (c < '0' || c > '3')
          throw ParseError("line " + std::to_string(lineno) + ": bad digit in \"" +
                           tok + "\"");
        d[i] = c - '0';
      }
      if (d[0] == d[1] || d[0] == d[2] || d[1] == d[2])
        throw ParseError("line " + std::to_string(lineno) + ": repeated digit in \"" +
                         tok + "\" at " + slot_name(tet, f));
      Perm4 map;
      const auto& fv = kFaceVertices[f];
      for (int i = 0; i < 3; i++) map.img[fv[i]] = uint8_t(d[i]);
      map.img[face_missing_vertex(f)] = uint8_t(6 - d[0] - d[1] - d[2]);
      T.face[f] = FaceGluing{target, map};
    }
    std::string extra;
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": tet " +
                       std::to_string(tet) + " face glued twice (extra token \"" +
                       extra + "\")");
    rows.emplace_back(tet, T);
  }
  if (rows.empty()) throw ParseError("no tetrahedra in input");

  int n = int(rows.size());
  std::vector<Tetrahedron> tets(n);
  std::vector<bool> seen(n, false);
  for (auto& [t, T] : rows) {
    if (t < 0 || t >= n)
      throw ParseError("tetrahedron index " + std::to_string(t) +
                       " out of range (expected 0.." + std::to_string(n - 1) + ")");
    if (seen[t])
      throw ParseError("duplicate row for tetrahedron " + std::to_string(t));
    seen[t] = true;
    tets[t] = T;
  }
  return Triangulation(std::move(tets));
}

std::string serialize(const Triangulation& tri) {
  std::ostringstream os;
  for (int t = 0; t < tri.size(); t++) {
    os << t << ":";
    for (int f = 0; f < 4; f++) {
      const FaceGluing& g = tri.tet(t).face[f];
      os << ' ' << g.target_tet << '(';
      for (int v : kFaceVertices[f]) os << g.vertex_map[v];
      os << ')';
    }
    os << '\n';
  }
  return os.str();
}

std::vector<EdgeClass> edge_classes(const Triangulation& tri) {
  const int n = tri.size();
  std::vector<int> parent(size_t(n) * 6);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  };

  for (int t = 0; t < n; t++) {
    for (int f = 0; f < 4; f++) {
      const FaceGluing& g = tri.tet(t).face[f];
      const auto& fv = kFaceVertices[f];
      for (int i = 0; i < 3; i++) {
        for (int j = i + 1; j < 3; j++) {
          int u = fv[i], v = fv[j];
          int a = g.vertex_map[u], b = g.vertex_map[v];
          unite(t * 6 + edge_index(u, v), g.target_tet * 6 + edge_index(a, b));
        }
      }
    }
  }

  std::vector<int> class_of_root(size_t(n) * 6, -1);
  std::vector<EdgeClass> classes;
  for (int s = 0; s < n * 6; s++) {
    int r = find(s);
    if (class_of_root[r] < 0) {
      class_of_root[r] = int(classes.size());
      classes.push_back(EdgeClass{int(classes.size()), {}});
    }
    classes[class_of_root[r]].members.emplace_back(s / 6, s % 6);
  }
  return classes;
}

std::vector<std::string> validation_warnings(const Triangulation& tri,
                                             const std::vector<EdgeClass>& classes) {
  std::vector<std::string> out;
  if (int(classes.size()) != tri.size())
    out.push_back("edge class count " + std::to_string(classes.size()) +
                  " != tetrahedron count " + std::to_string(tri.size()) +
                  " (not an ideal triangulation with torus cusps)");
  return out;
}

std::string edge_pair_name(int edge) {
  const auto& ev = kEdgeVertices[edge];
  return std::string{char('0' + ev[0]), char('0' + ev[1])};
}

int edge_pair_from_name(std::string_view name) {
  if (name.size() != 2 || name[0] < '0' || name[0] > '3' || name[1] < '0' ||
      name[1] > '3' || name[0] == name[1])
    return -1;
  return edge_index(name[0] - '0', name[1] - '0');
}

}  // namespace bslope
