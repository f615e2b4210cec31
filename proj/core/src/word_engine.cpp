#include "coxbip/word_engine.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "coxbip/error.hpp"

namespace coxbip {

WordEngine::WordEngine(CoxeterMatrix matrix, EngineLimits limits)
    : matrix_(std::move(matrix)), rank_(matrix_.rank()), limits_(limits) {
  nodes_.push_back(Node{kUnknown, 0, 0, kUnknown, 0});
  links_.assign(rank_, kUnknown);
}

void WordEngine::check_generator(Generator s) const {
  if (s >= rank_) {
    throw InvalidArgument("generator index " + std::to_string(s) + " out of range for rank " +
                          std::to_string(rank_));
  }
}

Element WordEngine::generator(Generator s) {
  check_generator(s);
  return Element{lmul(s, 0)};
}

Element WordEngine::from_word(std::span<const Generator> word) {
  if (word.size() > limits_.max_word_length) {
    throw CapExceeded("word of length " + std::to_string(word.size()) +
                      " exceeds the configured cap " + std::to_string(limits_.max_word_length));
  }
  for (Generator s : word) check_generator(s);
  std::uint32_t x = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = lmul(*it, x);
  return Element{x};
}

Word WordEngine::normal_form(Element e) const {
  Word out;
  out.reserve(nodes_[e.id].length);
  for (std::uint32_t x = e.id; x != 0; x = nodes_[x].tail) out.push_back(nodes_[x].first);
  return out;
}

GeneratorSet WordEngine::right_descents(Element e) {
  return left_descents(inverse(e));
}

Element WordEngine::left_multiply(Generator s, Element e) {
  check_generator(s);
  return Element{lmul(s, e.id)};
}

Element WordEngine::right_multiply(Element e, Generator s) {
  check_generator(s);
  return Element{invert(lmul(s, invert(e.id)))};
}

Element WordEngine::product(Element a, Element b) {
  std::uint32_t x = b.id;
  Word w = normal_form(a);
  for (auto it = w.rbegin(); it != w.rend(); ++it) x = lmul(*it, x);
  return Element{x};
}

Element WordEngine::inverse(Element e) { return Element{invert(e.id)}; }

Element WordEngine::conjugate_by(Generator s, Element e) {
  return right_multiply(left_multiply(s, e), s);
}

Element WordEngine::conjugate(Element e, Element x) {
  return product(inverse(x), product(e, x));
}

GeneratorSet WordEngine::support(Element e) const {
  GeneratorSet out;
  for (std::uint32_t x = e.id; x != 0; x = nodes_[x].tail) out.insert(nodes_[x].first);
  return out;
}

bool WordEngine::is_involution(Element e) { return e.id != 0 && invert(e.id) == e.id; }

std::optional<Reflection> WordEngine::as_reflection(Element e) {
  if (length(e) % 2 == 0 || !is_involution(e)) return std::nullopt;
  Reflection r{e, {}, 0};
  Element w = e;
  while (length(w) > 1) {
    bool stepped = false;
    for (Generator s = 0; s < rank_; ++s) {
      Element c = conjugate_by(s, w);
      if (length(c) < length(w)) {
        r.descent_chain.push_back(s);
        w = c;
        stepped = true;
        break;
      }
    }
    if (!stepped) return std::nullopt;
  }
  r.base = nodes_[w.id].first;
  return r;
}

std::uint32_t WordEngine::invert(std::uint32_t w) {
  if (nodes_[w].inverse != kUnknown) return nodes_[w].inverse;
  // nf(w) = c1 c2 ... cn, so w⁻¹ = cn ... c1 = cn·(...·(c2·c1)).
  std::uint32_t x = 0;
  for (std::uint32_t y = w; y != 0; y = nodes_[y].tail) x = lmul(nodes_[y].first, x);
  nodes_[w].inverse = x;
  nodes_[x].inverse = w;
  return x;
}

std::uint32_t WordEngine::lmul(Generator s, std::uint32_t w) {
  std::uint32_t cached = links_[w * rank_ + s];
  if (cached != kUnknown) return cached;
  std::uint32_t r = (nodes_[w].descents >> s) & 1U ? descend(s, w) : ascend(s, w);
  links_[w * rank_ + s] = r;
  links_[r * rank_ + s] = w;
  return r;
}

// s is a left descent of w. If s is the first letter we drop it; otherwise with
// a = first(w), w = Δ·x where Δ = (a s a ...) has m(a,s) letters, and
// s·w = (a s a ...)_{m-1}·x.
std::uint32_t WordEngine::descend(Generator s, std::uint32_t w) {
  const Node node = nodes_[w];
  const Generator a = node.first;
  if (a == s) return node.tail;
  const Label m = matrix_.m(a, s);
  std::uint32_t x = w;
  for (Label i = 0; i < m; ++i) x = lmul(i % 2 == 0 ? a : s, x);
  for (Label j = m - 1; j-- > 0;) x = lmul(j % 2 == 0 ? a : s, x);
  return x;
}

// c is not a left descent of y; builds the entry for z = c·y.
std::uint32_t WordEngine::ascend(Generator c, std::uint32_t y) {
  const std::uint32_t len = nodes_[y].length + 1;
  std::uint64_t descents = std::uint64_t{1} << c;
  Generator least = c;
  std::uint32_t least_base = kUnknown;  // x_m for the least descent other than c

  for (Generator b = 0; b < rank_; ++b) {
    if (b == c) continue;
    const Label m = matrix_.m(b, c);
    if (m == kInfinity) continue;
    // Alternating walk z -> c·z = y -> b·y -> c·b·y -> ..., m steps in total; b is a
    // left descent of z iff every step goes down.
    std::uint32_t x = y;
    bool down = true;
    for (Label step = 1; step < m; ++step) {
      Generator letter = step % 2 == 1 ? b : c;
      if (((nodes_[x].descents >> letter) & 1U) == 0) {
        down = false;
        break;
      }
      x = lmul(letter, x);
    }
    if (!down) continue;
    descents |= std::uint64_t{1} << b;
    if (b < least) {
      least = b;
      least_base = x;
    }
  }

  std::uint32_t tail = y;
  if (least != c) {
    // z = (c d c ...)_m · x_m with d = least, so d·z = (c d c ...)_{m-1} · x_m.
    const Label m = matrix_.m(least, c);
    std::uint32_t x = least_base;
    for (Label j = m - 1; j-- > 0;) x = lmul(j % 2 == 0 ? c : least, x);
    tail = x;
    std::uint32_t existing = links_[tail * rank_ + least];
    if (existing != kUnknown) return existing;
  }

  if (nodes_.size() >= limits_.max_elements) {
    throw CapExceeded("word engine table reached its cap of " +
                      std::to_string(limits_.max_elements) + " elements");
  }
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back(Node{tail, kUnknown, len, least, descents});
  links_.resize(links_.size() + rank_, kUnknown);
  links_[tail * rank_ + least] = id;
  links_[id * rank_ + least] = tail;
  return id;
}

Word WordEngine::parse_word(std::string_view text) const {
  Word out;
  std::string token;
  auto flush = [&]() {
    if (token.empty()) return;
    if (token != "e" || matrix_.find("e")) {
      auto g = matrix_.find(token);
      if (!g) throw InvalidArgument("unknown generator '" + token + "'");
      out.push_back(*g);
    }
    token.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*' || ch == '.') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return out;
}

std::string WordEngine::format_word(std::span<const Generator> word) const {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += matrix_.name(word[i]);
  }
  return out;
}

std::string WordEngine::format(Element e) const { return format_word(normal_form(e)); }

Word reduce(WordEngine& engine, std::span<const Generator> word) {
  return engine.normal_form(engine.from_word(word));
}

Element shortlex(WordEngine& engine, std::span<const Generator> word) {
  return engine.from_word(word);
}

}  // namespace coxbip
