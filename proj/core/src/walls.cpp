#include "coxbip/walls.hpp"

#include "coxbip/error.hpp"

namespace coxbip {

std::string HalfInt::to_string() const {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

bool wall_separates(WordEngine& engine, const Reflection& r, Element u, Element v) {
  auto below = [&](Element x) { return engine.length(engine.product(r.element, x)) < engine.length(x); };
  return below(u) != below(v);
}

HalfInt wall_distance(WordEngine& engine, Element v, const Reflection& r) {
  return HalfInt::from_twice(static_cast<long long>(engine.length(engine.conjugate(r.element, v))));
}

JTU jtu_sets(WordEngine& engine, Element v, const Reflection& r) {
  JTU out;
  out.translated = engine.conjugate(r.element, v);
  const Element rp = out.translated;
  const std::size_t len = engine.length(rp);
  out.t = engine.support(rp);
  for (Generator s = 0; s < engine.rank(); ++s) {
    Element g = engine.generator(s);
    if (g == rp) {
      out.j.insert(s);
      continue;
    }
    Element c = engine.conjugate_by(s, rp);
    if (engine.length(c) < len) out.j.insert(s);
    if (c == rp) out.u.insert(s);
  }
  return out;
}

Reflection require_reflection(WordEngine& engine, Element e) {
  auto r = engine.as_reflection(e);
  if (!r) throw InvalidArgument("'" + engine.format(e) + "' is not a reflection");
  return *r;
}

}  // namespace coxbip
