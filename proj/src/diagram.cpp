#include "parityknot/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

#include "parityknot/errors.hpp"

namespace parityknot {

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_space = [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' || ch == '\v';
  };
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t j = i;
    while (j < text.size() && !is_space(text[j])) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

// Cyclic left rotation amount normalised to [0, len).
std::size_t rotation_offset(long long steps, std::size_t len) {
  if (len == 0) return 0;
  auto l = static_cast<long long>(len);
  return static_cast<std::size_t>(((steps % l) + l) % l);
}

}  // namespace

ChordDiagram::ChordDiagram(std::span<const ChordId> labels, bool closed) : closed_(closed) {
  std::unordered_map<ChordId, ChordId> dense;
  word_.reserve(labels.size());
  for (ChordId label : labels) {
    auto [it, inserted] = dense.try_emplace(label, static_cast<ChordId>(dense.size()));
    word_.push_back(it->second);
  }
  std::vector<std::size_t> seen(dense.size(), 0);
  ends_.assign(dense.size(), {0, 0});
  for (std::size_t pos = 0; pos < word_.size(); ++pos) {
    auto c = static_cast<std::size_t>(word_[pos]);
    if (seen[c] < 2) ends_[c][seen[c]] = pos;
    ++seen[c];
  }
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (seen[c] != 2) {
      auto orig = std::find_if(dense.begin(), dense.end(),
                               [&](const auto& kv) { return kv.second == static_cast<ChordId>(c); });
      throw LabelCountError("chord label " + std::to_string(orig->first) + " occurs " +
                            std::to_string(seen[c]) + " times, expected 2");
    }
  }
}

ChordDiagram ChordDiagram::with_closed(bool closed) const {
  ChordDiagram copy = *this;
  copy.closed_ = closed;
  return copy;
}

std::array<std::size_t, 2> ChordDiagram::ends(ChordId c) const {
  if (c < 0 || static_cast<std::size_t>(c) >= ends_.size()) {
    throw UnknownChord("unknown chord " + std::to_string(c));
  }
  return ends_[static_cast<std::size_t>(c)];
}

GaussDiagram::GaussDiagram(ChordDiagram underlying, std::vector<Sign> signs,
                           std::vector<Occurrence> over)
    : underlying_(std::move(underlying)), signs_(std::move(signs)), over_(std::move(over)) {
  if (signs_.size() != underlying_.chord_count() || over_.size() != underlying_.chord_count()) {
    throw ParameterMismatch("gauss diagram decorations must cover every chord");
  }
}

GaussDiagram GaussDiagram::from_endpoints(std::span<const Endpoint> endpoints, bool closed) {
  std::vector<ChordId> labels;
  labels.reserve(endpoints.size());
  for (const auto& e : endpoints) labels.push_back(e.label);
  ChordDiagram base(labels, closed);

  const std::size_t n = base.chord_count();
  std::vector<Sign> signs(n, Sign::Plus);
  std::vector<Occurrence> over(n, Occurrence::First);
  std::vector<int> over_count(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    auto [a, b] = base.ends(static_cast<ChordId>(c));
    const auto& first = endpoints[a];
    const auto& second = endpoints[b];
    if (first.sign != second.sign) {
      throw SignMismatch("chord " + std::to_string(first.label) + " has different signs at its two ends");
    }
    if (first.over == second.over) {
      throw OUMismatch("chord " + std::to_string(first.label) + " needs exactly one O and one U end");
    }
    signs[c] = first.sign;
    over[c] = first.over ? Occurrence::First : Occurrence::Second;
  }
  return GaussDiagram(std::move(base), std::move(signs), std::move(over));
}

GaussDiagram GaussDiagram::all_positive(const ChordDiagram& underlying) {
  const std::size_t n = underlying.chord_count();
  return GaussDiagram(underlying, std::vector<Sign>(n, Sign::Plus),
                      std::vector<Occurrence>(n, Occurrence::First));
}

Sign GaussDiagram::sign(ChordId c) const {
  underlying_.ends(c);  // bounds check
  return signs_[static_cast<std::size_t>(c)];
}

Occurrence GaussDiagram::over(ChordId c) const {
  underlying_.ends(c);
  return over_[static_cast<std::size_t>(c)];
}

bool GaussDiagram::is_over_at(std::size_t pos) const {
  ChordId c = underlying_.word()[pos];
  auto e = underlying_.ends(c);
  bool first = e[0] == pos;
  return first == (over_[static_cast<std::size_t>(c)] == Occurrence::First);
}

std::vector<Endpoint> GaussDiagram::endpoints() const {
  std::vector<Endpoint> out;
  out.reserve(length());
  auto w = word();
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    out.push_back({w[pos], is_over_at(pos), signs_[static_cast<std::size_t>(w[pos])]});
  }
  return out;
}

GaussDiagram GaussDiagram::with_sign(ChordId c, Sign s) const {
  underlying_.ends(c);
  GaussDiagram copy = *this;
  copy.signs_[static_cast<std::size_t>(c)] = s;
  return copy;
}

GaussDiagram GaussDiagram::with_closed(bool closed) const {
  GaussDiagram copy = *this;
  copy.underlying_ = underlying_.with_closed(closed);
  return copy;
}

GaussDiagram GaussDiagram::with_arrow_flipped(ChordId c) const {
  underlying_.ends(c);
  GaussDiagram copy = *this;
  copy.over_[static_cast<std::size_t>(c)] = flip(over_[static_cast<std::size_t>(c)]);
  return copy;
}

ChordDiagram parse_free_code(std::string_view text, bool closed) {
  std::unordered_map<std::string_view, ChordId> ids;
  std::vector<ChordId> labels;
  for (auto tok : split_ws(text)) {
    auto [it, inserted] = ids.try_emplace(tok, static_cast<ChordId>(ids.size()));
    labels.push_back(it->second);
  }
  try {
    return ChordDiagram(labels, closed);
  } catch (const LabelCountError&) {
    for (const auto& [tok, id] : ids) {
      auto count = std::count(labels.begin(), labels.end(), id);
      if (count != 2) {
        throw LabelCountError("label '" + std::string(tok) + "' occurs " + std::to_string(count) +
                              " times, expected 2");
      }
    }
    throw;
  }
}

GaussDiagram parse_virtual_code(std::string_view text, bool closed) {
  static constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  std::unordered_map<std::string, ChordId> ids;
  std::vector<Endpoint> endpoints;
  std::vector<std::string> names;
  for (auto tok : split_ws(text)) {
    if (tok.size() < 3 || (tok.front() != 'O' && tok.front() != 'U')) {
      throw SyntaxError("bad gauss code token '" + std::string(tok) + "'");
    }
    Sign sign;
    std::string_view body = tok.substr(1);
    if (body.ends_with('+')) {
      sign = Sign::Plus;
      body.remove_suffix(1);
    } else if (body.ends_with('-')) {
      sign = Sign::Minus;
      body.remove_suffix(1);
    } else if (body.ends_with(kUnicodeMinus)) {
      sign = Sign::Minus;
      body.remove_suffix(kUnicodeMinus.size());
    } else {
      throw SyntaxError("token '" + std::string(tok) + "' lacks a trailing sign");
    }
    if (body.empty()) throw SyntaxError("token '" + std::string(tok) + "' lacks a chord id");
    auto [it, inserted] = ids.try_emplace(std::string(body), static_cast<ChordId>(ids.size()));
    if (inserted) names.emplace_back(body);
    endpoints.push_back({it->second, tok.front() == 'O', sign});
  }
  std::vector<int> count(ids.size(), 0);
  for (const auto& e : endpoints) ++count[static_cast<std::size_t>(e.label)];
  for (std::size_t c = 0; c < count.size(); ++c) {
    if (count[c] != 2) {
      throw LabelCountError("chord '" + names[c] + "' occurs " + std::to_string(count[c]) +
                            " times, expected 2");
    }
  }
  try {
    return GaussDiagram::from_endpoints(endpoints, closed);
  } catch (const ParseError& e) {
    // Re-throw with the user's label rather than the dense id.
    std::string msg = e.what();
    for (std::size_t c = 0; c < names.size(); ++c) {
      std::string dense = "chord " + std::to_string(c) + " ";
      if (msg.starts_with(dense)) msg = "chord '" + names[c] + "' " + msg.substr(dense.size());
    }
    if (dynamic_cast<const SignMismatch*>(&e)) throw SignMismatch(msg);
    throw OUMismatch(msg);
  }
}

bool looks_virtual(std::string_view text) {
  auto toks = split_ws(text);
  if (toks.empty()) return true;
  return std::all_of(toks.begin(), toks.end(), [](std::string_view t) {
    return t.size() >= 3 && (t.front() == 'O' || t.front() == 'U');
  });
}

std::string serialize_free_code(const ChordDiagram& d) {
  std::ostringstream out;
  auto w = d.word();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w[i] + 1;
  }
  return out.str();
}

std::string serialize_virtual_code(const GaussDiagram& k) {
  std::ostringstream out;
  auto eps = k.endpoints();
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (i) out << ' ';
    out << (eps[i].over ? 'O' : 'U') << eps[i].label + 1 << (eps[i].sign == Sign::Plus ? '+' : '-');
  }
  return out.str();
}

bool linked(const ChordDiagram& d, ChordId c, ChordId e) {
  if (c == e) throw Error("linked: a chord is not compared with itself");
  auto [a, b] = d.ends(c);
  auto [x, y] = d.ends(e);
  bool x_in = a < x && x < b;
  bool y_in = a < y && y < b;
  return x_in != y_in;
}

std::size_t linked_count(const ChordDiagram& d, ChordId c) {
  std::size_t count = 0;
  for (std::size_t e = 0; e < d.chord_count(); ++e) {
    if (static_cast<ChordId>(e) != c && linked(d, c, static_cast<ChordId>(e))) ++count;
  }
  return count;
}

ChordDiagram rotate_basepoint(const ChordDiagram& d, long long steps) {
  if (!d.closed()) throw NotClosed("basepoint rotation needs a closed diagram");
  std::vector<ChordId> w(d.word().begin(), d.word().end());
  std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(rotation_offset(steps, w.size())),
              w.end());
  return ChordDiagram(w, true);
}

GaussDiagram rotate_basepoint(const GaussDiagram& k, long long steps) {
  if (!k.closed()) throw NotClosed("basepoint rotation needs a closed diagram");
  auto eps = k.endpoints();
  std::rotate(eps.begin(),
              eps.begin() + static_cast<std::ptrdiff_t>(rotation_offset(steps, eps.size())),
              eps.end());
  return GaussDiagram::from_endpoints(eps, true);
}

namespace {

std::vector<ChordId> random_matching_word(std::size_t n, std::mt19937_64& rng) {
  std::vector<ChordId> w(2 * n);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = static_cast<ChordId>(i / 2);
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

}  // namespace

ChordDiagram random_diagram(std::size_t n, std::uint64_t seed, bool closed) {
  std::mt19937_64 rng(seed);
  return ChordDiagram(random_matching_word(n, rng), closed);
}

GaussDiagram random_gauss_diagram(std::size_t n, std::uint64_t seed, bool closed) {
  std::mt19937_64 rng(seed);
  ChordDiagram base(random_matching_word(n, rng), closed);
  std::bernoulli_distribution coin(0.5);
  std::vector<Sign> signs(n);
  std::vector<Occurrence> over(n);
  for (std::size_t c = 0; c < n; ++c) {
    signs[c] = coin(rng) ? Sign::Plus : Sign::Minus;
    over[c] = coin(rng) ? Occurrence::First : Occurrence::Second;
  }
  return GaussDiagram(std::move(base), std::move(signs), std::move(over));
}

void to_json(nlohmann::json& j, const ChordDiagram& d) {
  j = nlohmann::json{{"word", std::vector<ChordId>(d.word().begin(), d.word().end())},
                     {"closed", d.closed()}};
}

void to_json(nlohmann::json& j, const GaussDiagram& k) {
  to_json(j, k.underlying());
  nlohmann::json signs = nlohmann::json::object();
  nlohmann::json over = nlohmann::json::object();
  for (std::size_t c = 0; c < k.chord_count(); ++c) {
    signs[std::to_string(c)] = value(k.signs()[c]);
    over[std::to_string(c)] = k.overs()[c] == Occurrence::First ? "first" : "second";
  }
  j["signs"] = std::move(signs);
  j["over"] = std::move(over);
}

ChordDiagram chord_diagram_from_json(const nlohmann::json& j) {
  try {
    auto word = j.at("word").get<std::vector<ChordId>>();
    return ChordDiagram(word, j.value("closed", false));
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("diagram json: ") + e.what());
  }
}

GaussDiagram gauss_diagram_from_json(const nlohmann::json& j) {
  ChordDiagram base = chord_diagram_from_json(j);
  // Labels in the json may be arbitrary; map them through first appearance
  // exactly as the ChordDiagram constructor does.
  std::vector<ChordId> raw;
  std::unordered_map<ChordId, ChordId> to_dense;
  try {
    raw = j.at("word").get<std::vector<ChordId>>();
    for (ChordId label : raw) to_dense.try_emplace(label, static_cast<ChordId>(to_dense.size()));
    std::vector<Sign> signs(base.chord_count(), Sign::Plus);
    std::vector<Occurrence> over(base.chord_count(), Occurrence::First);
    for (const auto& [label, dense] : to_dense) {
      auto key = std::to_string(label);
      int s = j.at("signs").at(key).get<int>();
      if (s != 1 && s != -1) throw SyntaxError("sign of chord " + key + " must be +1 or -1");
      signs[static_cast<std::size_t>(dense)] = s > 0 ? Sign::Plus : Sign::Minus;
      auto o = j.at("over").at(key).get<std::string>();
      if (o != "first" && o != "second") throw SyntaxError("over of chord " + key + " must be first|second");
      over[static_cast<std::size_t>(dense)] = o == "first" ? Occurrence::First : Occurrence::Second;
    }
    return GaussDiagram(std::move(base), std::move(signs), std::move(over));
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("gauss diagram json: ") + e.what());
  }
}

}  // namespace parityknot
