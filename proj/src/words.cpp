#include "tangle/words.hpp"

#include <algorithm>
#include <set>

#include "tangle/error.hpp"

namespace tangle::words {

PointedMonoid::PointedMonoid(Ops ops, std::size_t check_bound) : ops_(std::move(ops)) {
  if (!ops_.enumerate || !ops_.multiply) throw Error("pointed monoid '" + ops_.name + "' is missing operations");
  if (!ops_.is_unit) ops_.is_unit = [u = ops_.unit](Element x) { return x == u; };
  if (!ops_.length) ops_.length = [u = ops_.is_unit](Element x) -> std::size_t { return u(x) ? 0 : 1; };
  if (!ops_.show) ops_.show = [](Element x) { return std::to_string(x); };

  const auto elems = ops_.enumerate(check_bound);
  const std::set<Element> distinct(elems.begin(), elems.end());
  if (distinct.size() != elems.size()) throw Error("pointed monoid '" + ops_.name + "': repeated elements");
  std::size_t units = 0;
  for (Element x : elems) {
    if (ops_.is_unit(x)) {
      ++units;
      if (x != ops_.unit) throw Error("pointed monoid '" + ops_.name + "': is_unit holds off the unit");
    }
  }
  if (units != 1)
    throw Error("pointed monoid '" + ops_.name + "': the unit component must be a single element, found " +
                std::to_string(units));
  for (Element x : elems) {
    if (ops_.multiply(ops_.unit, x) != x || ops_.multiply(x, ops_.unit) != x)
      throw Error("pointed monoid '" + ops_.name + "': unit law fails at " + ops_.show(x));
    for (Element y : elems)
      for (Element z : elems)
        if (ops_.multiply(ops_.multiply(x, y), z) != ops_.multiply(x, ops_.multiply(y, z)))
          throw Error("pointed monoid '" + ops_.name + "': not associative");
  }
}

std::vector<Element> PointedMonoid::nonunits(std::size_t bound) const {
  auto all = elements(bound);
  std::erase_if(all, [this](Element x) { return is_unit(x); });
  return all;
}

PointedMonoid PointedMonoid::cyclic(int n) {
  if (n < 1) throw Error("cyclic monoid order must be positive");
  Ops ops;
  ops.name = "Z/" + std::to_string(n);
  ops.enumerate = [n](std::size_t) {
    std::vector<Element> v;
    for (int i = 0; i < n; ++i) v.push_back(i);
    return v;
  };
  ops.multiply = [n](Element a, Element b) { return (a + b) % n; };
  ops.unit = 0;
  return PointedMonoid(std::move(ops));
}

PointedMonoid PointedMonoid::trivial() {
  Ops ops;
  ops.name = "1";
  ops.enumerate = [](std::size_t) { return std::vector<Element>{0}; };
  ops.multiply = [](Element, Element) { return Element{0}; };
  ops.unit = 0;
  return PointedMonoid(std::move(ops));
}

PointedMonoid PointedMonoid::free_on_one(const std::string& generator) {
  Ops ops;
  ops.name = "F(" + generator + ")";
  ops.enumerate = [](std::size_t bound) {
    std::vector<Element> v;
    for (std::size_t i = 0; i <= bound; ++i) v.push_back(static_cast<Element>(i));
    return v;
  };
  ops.multiply = [](Element a, Element b) { return a + b; };
  ops.unit = 0;
  ops.length = [](Element a) { return static_cast<std::size_t>(a); };
  ops.show = [generator](Element a) {
    if (a == 0) return std::string("1");
    if (a == 1) return generator;
    return generator + "^" + std::to_string(a);
  };
  return PointedMonoid(std::move(ops));
}

PointedMonoid PointedMonoid::from_table(std::string name, std::vector<std::vector<int>> table) {
  const auto n = table.size();
  if (n == 0) throw Error("monoid table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw Error("monoid table is not square");
    for (int x : row)
      if (x < 0 || static_cast<std::size_t>(x) >= n) throw Error("monoid table entry out of range");
  }
  Ops ops;
  ops.name = std::move(name);
  ops.enumerate = [n](std::size_t) {
    std::vector<Element> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(static_cast<Element>(i));
    return v;
  };
  ops.multiply = [t = std::move(table)](Element a, Element b) {
    return static_cast<Element>(t.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b)));
  };
  ops.unit = 0;
  return PointedMonoid(std::move(ops));
}

StarElement::StarElement(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i - 1].side == letters_[i].side) throw Error("star element: adjacent letters share a side");
}

namespace {

const PointedMonoid& monoid_for(const PointedMonoid& a, const PointedMonoid& b, Side s) {
  return s == Side::Left ? a : b;
}

}  // namespace

void validate(const PointedMonoid& a, const PointedMonoid& b, const StarElement& u) {
  for (const auto& l : u.letters())
    if (monoid_for(a, b, l.side).is_unit(l.value)) throw Error("star element contains a unit letter");
}

StarElement star_multiply(const PointedMonoid& a, const PointedMonoid& b, const StarElement& u,
                          const StarElement& v) {
  std::vector<Letter> stack = u.letters();
  for (const Letter& l : v.letters()) {
    if (!stack.empty() && stack.back().side == l.side) {
      const auto& m = monoid_for(a, b, l.side);
      const Element merged = m.multiply(stack.back().value, l.value);
      stack.pop_back();
      if (!m.is_unit(merged)) stack.push_back({l.side, merged});
    } else {
      stack.push_back(l);
    }
  }
  return StarElement(std::move(stack));
}

StarElement star_letter(const PointedMonoid& a, const PointedMonoid& b, Side side, Element value) {
  if (monoid_for(a, b, side).is_unit(value)) return {};
  return StarElement({Letter{side, value}});
}

std::string to_string(const PointedMonoid& a, const PointedMonoid& b, const StarElement& u) {
  if (u.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < u.letters().size(); ++i) {
    const auto& l = u.letters()[i];
    if (i) out += ' ';
    out += (l.side == Side::Left ? "L:" : "R:") + monoid_for(a, b, l.side).show(l.value);
  }
  return out;
}

Stratum stratum_of(const StarElement& u) {
  const std::size_t n = u.alternation_length();
  if (n == 0) return {"1", 0};
  const bool left = u.letters().front().side == Side::Left;
  if (n % 2 == 1) return {left ? "A(BA)^k" : "B(AB)^k", (n - 1) / 2};
  return {left ? "(AB)^{k+1}" : "(BA)^{k+1}", n / 2 - 1};
}

namespace {

struct Enumerator {
  const std::vector<Element>* left;
  const std::vector<Element>* right;
  const PointedMonoid* a;
  const PointedMonoid* b;
  std::size_t max_alternation;
  std::size_t max_length;  // total letter length budget
  StarEnumeration out;
  std::vector<Letter> current;

  void emit() {
    StarElement e(current);
    out.counts[stratum_of(e)]++;
    out.elements.push_back(std::move(e));
  }

  void extend(std::size_t used) {
    if (current.size() == max_alternation) return;
    for (Side s : {Side::Left, Side::Right}) {
      if (!current.empty() && current.back().side == s) continue;
      const auto& pool = s == Side::Left ? *left : *right;
      const auto& m = s == Side::Left ? *a : *b;
      for (Element x : pool) {
        const std::size_t len = m.length(x);
        if (used + len > max_length) continue;
        current.push_back({s, x});
        emit();
        extend(used + len);
        current.pop_back();
      }
    }
  }
};

StarEnumeration run(const PointedMonoid& a, const PointedMonoid& b, std::size_t max_alternation,
                    std::size_t element_bound, std::size_t max_length) {
  const auto left = a.nonunits(element_bound);
  const auto right = b.nonunits(element_bound);
  Enumerator en{&left, &right, &a, &b, max_alternation, max_length, {}, {}};
  en.emit();
  en.extend(0);
  std::sort(en.out.elements.begin(), en.out.elements.end());
  return std::move(en.out);
}

}  // namespace

StarEnumeration star_enumerate(const PointedMonoid& a, const PointedMonoid& b, std::size_t max_alternation,
                               std::size_t element_bound) {
  return run(a, b, max_alternation, element_bound, static_cast<std::size_t>(-1));
}

StarEnumeration star_enumerate_by_length(const PointedMonoid& a, const PointedMonoid& b,
                                         std::size_t max_length) {
  return run(a, b, max_length, max_length, max_length);
}

std::map<Stratum, std::size_t> star_stratum_formula(std::size_t nonunits_a, std::size_t nonunits_b,
                                                    std::size_t max_alternation) {
  auto power = [](std::size_t base, std::size_t e) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= base;
    return r;
  };
  std::map<Stratum, std::size_t> out;
  out[{"1", 0}] = 1;
  for (std::size_t k = 0;; ++k) {
    bool any = false;
    if (2 * k + 1 <= max_alternation) {
      out[{"A(BA)^k", k}] = power(nonunits_a, k + 1) * power(nonunits_b, k);
      out[{"B(AB)^k", k}] = power(nonunits_b, k + 1) * power(nonunits_a, k);
      any = true;
    }
    if (2 * k + 2 <= max_alternation) {
      out[{"(AB)^{k+1}", k}] = power(nonunits_a, k + 1) * power(nonunits_b, k + 1);
      out[{"(BA)^{k+1}", k}] = power(nonunits_b, k + 1) * power(nonunits_a, k + 1);
      any = true;
    }
    if (!any) break;
  }
  // drop empty strata so the map compares equal to an enumeration's counts
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace tangle::words
