#pragma once

#include <variant>

namespace scatterlab {

struct TermNode {
  std::variant<terms::Empty, terms::Point, terms::Interval, terms::Ladder, terms::Cantor,
               terms::FWrap, terms::Affine, terms::Union, terms::Thicken, terms::Mirror,
               terms::EndpointSet, terms::Geo, terms::CantorOrbit>
      v;
};

inline Kind Term::kind() const { return static_cast<Kind>(node_->v.index()); }

template <class T>
const T& Term::as() const {
  return std::get<T>(node_->v);
}

template <class T>
const T* Term::get_if() const {
  return std::get_if<T>(&node_->v);
}

}  // namespace scatterlab
