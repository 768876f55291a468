#include "defreg/complexes.hpp"

#include "defreg/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace defreg {

namespace {

const std::vector<SimplicialComplex::Face> kNoFaces;

struct LabelledFaces {
  std::vector<std::string> vertices;
  std::set<SimplicialComplex::Face> faces;
};

LabelledFaces index_faces(const std::vector<std::vector<std::string>>& faces) {
  LabelledFaces out;
  std::set<std::string> labels;
  for (const auto& f : faces)
    labels.insert(f.begin(), f.end());
  out.vertices.assign(labels.begin(), labels.end());
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < out.vertices.size(); ++i)
    index.emplace(out.vertices[i], i);
  for (const auto& f : faces) {
    SimplicialComplex::Face face;
    face.reserve(f.size());
    for (const auto& label : f)
      face.push_back(index.at(label));
    std::sort(face.begin(), face.end());
    if (std::adjacent_find(face.begin(), face.end()) != face.end())
      throw InvalidComplex("face lists a vertex twice");
    out.faces.insert(std::move(face));
  }
  return out;
}

void check_budget(std::size_t count, std::size_t budget) {
  if (count > budget)
    throw FaceBudgetExceeded("simplicial complex exceeds the face budget of " + std::to_string(budget));
}

} // namespace

SimplicialComplex SimplicialComplex::empty_complex() {
  SimplicialComplex c;
  c.by_size_.push_back({Face{}});
  return c;
}

SimplicialComplex SimplicialComplex::generated_by(const std::vector<std::vector<std::string>>& faces,
                                                  std::size_t face_budget) {
  auto indexed = index_faces(faces);
  std::set<Face> closed;
  for (const auto& f : indexed.faces) {
    if (f.size() >= 63 || (std::size_t{1} << f.size()) > face_budget)
      throw FaceBudgetExceeded("a generating face is too large for the face budget");
    const std::size_t subsets = std::size_t{1} << f.size();
    for (std::size_t mask = 0; mask < subsets; ++mask) {
      Face sub;
      for (std::size_t k = 0; k < f.size(); ++k)
        if (mask & (std::size_t{1} << k))
          sub.push_back(f[k]);
      closed.insert(std::move(sub));
    }
    check_budget(closed.size(), face_budget);
  }
  SimplicialComplex c;
  c.vertices_ = std::move(indexed.vertices);
  for (auto& f : closed) {
    if (c.by_size_.size() <= f.size())
      c.by_size_.resize(f.size() + 1);
    c.by_size_[f.size()].push_back(f);
  }
  return c;
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<std::vector<std::string>>& faces,
                                                std::size_t face_budget) {
  auto indexed = index_faces(faces);
  check_budget(indexed.faces.size(), face_budget);
  for (const auto& f : indexed.faces) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(k));
      if (!indexed.faces.contains(sub))
        throw InvalidComplex("face set is not closed under taking subsets");
    }
  }
  SimplicialComplex c;
  c.vertices_ = std::move(indexed.vertices);
  for (const auto& f : indexed.faces) {
    if (c.by_size_.size() <= f.size())
      c.by_size_.resize(f.size() + 1);
    c.by_size_[f.size()].push_back(f);
  }
  return c;
}

const std::vector<SimplicialComplex::Face>& SimplicialComplex::faces(int d) const {
  if (d < -1 || static_cast<std::size_t>(d + 1) >= by_size_.size())
    return kNoFaces;
  return by_size_[static_cast<std::size_t>(d + 1)];
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t n = 0;
  for (const auto& layer : by_size_)
    n += layer.size();
  return n;
}

bool HomologyProfile::is_zero() const {
  return std::all_of(betti.begin(), betti.end(), [](std::size_t b) { return b == 0; });
}

ExactMatrix boundary_matrix(const SimplicialComplex& c, int i) {
  const auto& sources = c.faces(i);
  const auto& targets = c.faces(i - 1);
  static const Rational plus{1};
  static const Rational minus{-1};
  ExactMatrix m(targets.size(), sources.size());
  for (std::size_t col = 0; col < sources.size(); ++col) {
    const auto& sigma = sources[col];
    for (std::size_t k = 0; k < sigma.size(); ++k) {
      SimplicialComplex::Face tau = sigma;
      tau.erase(tau.begin() + static_cast<std::ptrdiff_t>(k));
      auto it = std::lower_bound(targets.begin(), targets.end(), tau);
      const auto row = static_cast<std::size_t>(it - targets.begin());
      m.set(row, col, k % 2 == 0 ? plus : minus);
    }
  }
  return m;
}

HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldSpec& f) {
  HomologyProfile h;
  h.field = f;
  if (c.is_void())
    return h;
  const int top = c.dimension();
  // ranks[i] = rank of d_i for i in 0..top; d_{-1} and d_{top+1} vanish.
  std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int i = 0; i <= top; ++i)
    ranks[static_cast<std::size_t>(i)] = rank(boundary_matrix(c, i), f);
  h.betti.resize(static_cast<std::size_t>(top + 2));
  for (int d = -1; d <= top; ++d) {
    const std::size_t faces = c.faces(d).size();
    const std::size_t out_rank = d >= 0 ? ranks[static_cast<std::size_t>(d)] : 0;
    const std::size_t in_rank = ranks[static_cast<std::size_t>(d + 1)];
    h.betti[static_cast<std::size_t>(d + 1)] = faces - out_rank - in_rank;
  }
  return h;
}

} // namespace defreg
