#pragma once

#include <optional>
#include <string>
#include <vector>

#include "core/lattice.hpp"

namespace nf {

/// Compact facets of the Newton polyhedron conv(support + R^n_{>=0}).
class NewtonDiagram {
 public:
  NewtonDiagram(std::vector<LinearForm> facets, std::vector<Exponent> support,
                std::vector<Exponent> vertices);

  std::size_t num_variables() const { return support_.front().size(); }
  std::size_t num_facets() const { return facets_.size(); }
  const std::vector<LinearForm>& facets() const { return facets_; }
  const LinearForm& facet(std::size_t i) const { return facets_[i]; }
  const std::vector<Exponent>& support() const { return support_; }
  const std::vector<Exponent>& vertices() const { return vertices_; }
  const std::optional<Exponent>& stellar_vertex() const { return stellar_vertex_; }

  /// Same diagram, facets listed in `order` (a permutation of facets()).
  NewtonDiagram with_facet_order(const std::vector<LinearForm>& order) const;

 private:
  std::vector<LinearForm> facets_;
  std::vector<Exponent> support_;
  std::vector<Exponent> vertices_;
  std::optional<Exponent> stellar_vertex_;
};

/// Facets in lexicographic order. Throws InputError for non-convenient or
/// empty support, UnsupportedError for n < 2.
NewtonDiagram compute_diagram(const std::vector<Exponent>& support);

std::optional<Exponent> is_stellar(const NewtonDiagram& diagram);

struct FacetValidation {
  bool equal = true;
  std::vector<LinearForm> missing;  // computed but not supplied
  std::vector<LinearForm> extra;    // supplied but not a facet
  std::vector<LinearForm> duplicated;
  std::string note;
};

FacetValidation validate_user_facets(const NewtonDiagram& diagram,
                                     const std::vector<LinearForm>& user);

/// (d_1, ..., d_s).
MultiIndex u_of_f(const NewtonDiagram& diagram);

/// Column j of the facet coefficient matrix, for every variable j.
std::vector<MultiIndex> u_of_variables(const NewtonDiagram& diagram);

}  // namespace nf
