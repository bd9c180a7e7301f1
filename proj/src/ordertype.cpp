#include "scatterlab/ordertype.hpp"

#include "scatterlab/error.hpp"
#include "scatterlab/lowered.hpp"
#include "scatterlab/semantics.hpp"

namespace scatterlab {

using namespace terms;

OrdCNF OrdCNF::finite(long n) {
  OrdCNF o;
  if (n > 0) o.terms.emplace_back(0, n);
  return o;
}

OrdCNF OrdCNF::omega_power(int e, long c) {
  OrdCNF o;
  if (c > 0) o.terms.emplace_back(e, c);
  return o;
}

std::string OrdCNF::str() const {
  if (terms.empty()) return "0";
  std::string out;
  for (auto& [e, c] : terms) {
    if (!out.empty()) out += "+";
    if (e == 0) {
      out += std::to_string(c);
      continue;
    }
    out += e == 1 ? "w" : "w^" + std::to_string(e);
    if (c > 1) out += "·" + std::to_string(c);
  }
  return out;
}

OrdCNF add(const OrdCNF& a, const OrdCNF& b) {
  if (b.is_zero()) return a;
  int lead = b.terms.front().first;
  OrdCNF out;
  // Terms of a below b's leading exponent are absorbed.
  for (auto& t : a.terms)
    if (t.first >= lead) out.terms.push_back(t);
  auto it = b.terms.begin();
  if (!out.terms.empty() && out.terms.back().first == lead) {
    out.terms.back().second += it->second;
    ++it;
  }
  out.terms.insert(out.terms.end(), it, b.terms.end());
  return out;
}

OrdCNF mul_omega(const OrdCNF& a) {
  if (a.is_zero()) return a;
  return OrdCNF::omega_power(a.terms.front().first + 1);
}

std::strong_ordering cmp(const OrdCNF& a, const OrdCNF& b) {
  for (size_t i = 0; i < a.terms.size() && i < b.terms.size(); ++i) {
    if (auto c = a.terms[i].first <=> b.terms[i].first; c != 0) return c;
    if (auto c = a.terms[i].second <=> b.terms[i].second; c != 0) return c;
  }
  return a.terms.size() <=> b.terms.size();
}

namespace {

OrdCNF type_of(const Term& t) {
  switch (t.kind()) {
    case Kind::empty: return {};
    case Kind::point: return OrdCNF::finite(1);
    case Kind::union_: {
      auto& parts = t.as<Union>().parts;
      OrdCNF out;
      for (size_t i = 0; i < parts.size(); ++i) {
        if (i + 1 < parts.size()) {
          Rat hi = hull(parts[i])->hi, lo = hull(parts[i + 1])->lo;
          if (hi > lo || (hi == lo && member(parts[i], hi) && member(parts[i + 1], lo)))
            fail(ErrorKind::not_well_ordered, "union parts are not separated");
        }
        out = add(out, type_of(parts[i]));
      }
      return out;
    }
    case Kind::geo: {
      auto& g = t.as<Geo>();
      if (hull(g.seed)->hi >= g.center) fail(ErrorKind::not_well_ordered, "descending accumulation");
      OrdCNF out = mul_omega(type_of(g.seed));
      return g.include_center ? add(out, OrdCNF::finite(1)) : out;
    }
    default:
      fail(ErrorKind::not_well_ordered, std::string("no order type for ") + std::string(kind_name(t.kind())));
  }
}

}  // namespace

OrdCNF scattered_order_type(const Term& t) { return type_of(lower(t)); }

LinType LinType::fin(long k) {
  LinType t;
  t.k = k;
  return t;
}

LinType LinType::zeta() {
  LinType t;
  t.tag = Tag::zeta;
  return t;
}

LinType LinType::sum(std::vector<LinType> parts) {
  LinType t;
  t.tag = Tag::sum;
  t.items = std::move(parts);
  return t;
}

LinType LinType::omega_seq(std::vector<LinType> prefix) {
  LinType t;
  t.tag = Tag::omega_seq;
  t.items = std::move(prefix);
  return t;
}

namespace {

void flatten_into(const LinType& t, std::vector<LinType>& out) {
  if (t.tag == LinType::Tag::sum) {
    for (auto& p : t.items) flatten_into(p, out);
    return;
  }
  LinType c = t.canonical();
  if (c.tag == LinType::Tag::fin) {
    if (c.k == 0) return;
    if (!out.empty() && out.back().tag == LinType::Tag::fin) {
      out.back().k += c.k;
      return;
    }
  }
  out.push_back(std::move(c));
}

}  // namespace

LinType LinType::canonical() const {
  switch (tag) {
    case Tag::fin:
    case Tag::zeta: return *this;
    case Tag::sum: {
      std::vector<LinType> parts;
      flatten_into(*this, parts);
      if (parts.empty()) return fin(0);
      if (parts.size() == 1) return parts.front();
      return sum(std::move(parts));
    }
    case Tag::omega_seq: {
      std::vector<LinType> prefix;
      for (auto& p : items) prefix.push_back(p.canonical());
      return omega_seq(std::move(prefix));
    }
  }
  return *this;
}

std::string LinType::str() const {
  switch (tag) {
    case Tag::fin: return std::to_string(k);
    case Tag::zeta: return "z";
    case Tag::sum:
    case Tag::omega_seq: {
      std::string out;
      for (auto& p : items) {
        if (!out.empty()) out += "+";
        out += p.str();
      }
      if (tag == Tag::omega_seq) out += "+…";
      return out;
    }
  }
  return "";
}

std::optional<bool> lin_equal(const LinType& a, const LinType& b) {
  LinType x = a.canonical(), y = b.canonical();
  if (x.tag == LinType::Tag::omega_seq && y.tag == LinType::Tag::omega_seq && x.items.size() != y.items.size())
    return std::nullopt;
  return x == y;
}

LinType ug_order_type(const std::vector<int>& bits) {
  std::vector<LinType> prefix{LinType::fin(1)};
  for (int b : bits) {
    prefix.push_back(LinType::zeta());
    prefix.push_back(LinType::fin(2 + b));
  }
  return LinType::omega_seq(std::move(prefix));
}

}  // namespace scatterlab
