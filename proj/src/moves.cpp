#include "parityknot/moves.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "parityknot/errors.hpp"

namespace parityknot {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// Read-only view answering adjacency questions about a word.
class Sites {
 public:
  explicit Sites(const GaussDiagram& k) : k_(k), len_(k.length()), closed_(k.closed()) {}

  std::size_t length() const { return len_; }

  // Positions i such that (i, next(i)) is an adjacent pair not crossing the
  // basepoint of a long diagram.
  std::vector<std::size_t> pair_starts() const {
    std::vector<std::size_t> out;
    if (len_ < 2) return out;
    for (std::size_t i = 0; i + 1 < len_; ++i) out.push_back(i);
    if (closed_ && len_ > 2) out.push_back(len_ - 1);
    return out;
  }

  std::size_t next(std::size_t i) const { return (i + 1) % len_; }

  bool is_pair_start(std::size_t i) const {
    if (i + 1 < len_) return true;
    return closed_ && len_ > 2 && i == len_ - 1;
  }

  bool adjacent(std::size_t x, std::size_t y) const {
    if (x > y) std::swap(x, y);
    if (y - x == 1) return true;
    return closed_ && len_ > 2 && x == 0 && y == len_ - 1;
  }

  bool solitary(ChordId c) const {
    auto [a, b] = k_.underlying().ends(c);
    return adjacent(a, b);
  }

  bool similar(ChordId a, ChordId b) const {
    if (a == b) return false;
    auto [a1, a2] = k_.underlying().ends(a);
    auto [b1, b2] = k_.underlying().ends(b);
    return (adjacent(a1, b1) && adjacent(a2, b2)) || (adjacent(a1, b2) && adjacent(a2, b1));
  }

  // {p,q}, {p,r}, {q,r} realised by three disjoint adjacent pairs.
  bool triangle(const std::array<std::size_t, 3>& starts) const {
    std::set<std::size_t> used;
    std::set<std::pair<ChordId, ChordId>> chord_pairs;
    std::set<ChordId> chords;
    auto w = k_.word();
    for (std::size_t s : starts) {
      if (s >= len_ || !is_pair_start(s)) return false;
      std::size_t t = next(s);
      used.insert(s);
      used.insert(t);
      ChordId x = w[s], y = w[t];
      if (x == y) return false;
      chord_pairs.insert(std::minmax(x, y));
      chords.insert(x);
      chords.insert(y);
    }
    return used.size() == 6 && chords.size() == 3 && chord_pairs.size() == 3;
  }

 private:
  const GaussDiagram& k_;
  std::size_t len_;
  bool closed_;
};

std::vector<std::array<std::size_t, 3>> triangle_sites(const GaussDiagram& k) {
  Sites sites(k);
  auto w = k.word();
  // chord pair -> adjacent pairs realising it
  std::map<std::pair<ChordId, ChordId>, std::vector<std::size_t>> by_pair;
  for (std::size_t s : sites.pair_starts()) {
    ChordId x = w[s], y = w[sites.next(s)];
    if (x != y) by_pair[std::minmax(x, y)].push_back(s);
  }
  std::set<std::array<std::size_t, 3>> out;
  for (const auto& [pq, pq_starts] : by_pair) {
    auto [p, q] = pq;
    for (const auto& [pr, pr_starts] : by_pair) {
      if (pr.first != p || pr.second == q) continue;
      ChordId r = pr.second;
      auto qr = by_pair.find(std::minmax(q, r));
      if (qr == by_pair.end()) continue;
      for (std::size_t a : pq_starts) {
        for (std::size_t b : pr_starts) {
          for (std::size_t c : qr->second) {
            std::array<std::size_t, 3> site{a, b, c};
            std::sort(site.begin(), site.end());
            if (sites.triangle(site)) out.insert(site);
          }
        }
      }
    }
  }
  return {out.begin(), out.end()};
}

std::vector<std::pair<ChordId, ChordId>> similar_pairs(const GaussDiagram& k, bool decorated) {
  Sites sites(k);
  auto w = k.word();
  std::set<std::pair<ChordId, ChordId>> out;
  for (std::size_t s : sites.pair_starts()) {
    ChordId x = w[s], y = w[sites.next(s)];
    if (x == y) continue;
    auto pair = std::minmax(x, y);
    if (!sites.similar(pair.first, pair.second)) continue;
    if (decorated && k.sign(pair.first) == k.sign(pair.second)) continue;
    out.insert(pair);
  }
  return {out.begin(), out.end()};
}

std::vector<ChordId> solitary_chords(const GaussDiagram& k) {
  Sites sites(k);
  std::vector<ChordId> out;
  for (std::size_t c = 0; c < k.chord_count(); ++c) {
    if (sites.solitary(static_cast<ChordId>(c))) out.push_back(static_cast<ChordId>(c));
  }
  return out;
}

GaussDiagram apply_impl(const GaussDiagram& k, const MoveInstance& mv, bool decorated) {
  Sites sites(k);
  const std::size_t len = k.length();
  const auto fresh = static_cast<ChordId>(k.chord_count());
  auto eps = k.endpoints();
  auto stale = [&](const std::string& why) -> StaleMove {
    return StaleMove(to_string(kind_of(mv)) + ": " + why);
  };
  auto chord_ok = [&](ChordId c) { return c >= 0 && static_cast<std::size_t>(c) < k.chord_count(); };

  std::visit(
      Overloaded{
          [&](const R1Add& m) {
            if (m.slot > len) throw stale("slot out of range");
            bool first_over = m.over == Occurrence::First;
            Sign s = decorated ? m.sign : Sign::Plus;
            eps.insert(eps.begin() + static_cast<std::ptrdiff_t>(m.slot),
                       {Endpoint{fresh, first_over, s}, Endpoint{fresh, !first_over, s}});
          },
          [&](const R1Remove& m) {
            if (!chord_ok(m.chord) || !sites.solitary(m.chord)) throw stale("chord is not solitary");
            std::erase_if(eps, [&](const Endpoint& e) { return e.label == m.chord; });
          },
          [&](const R2Add& m) {
            if (m.first_slot > m.second_slot || m.second_slot > len) throw stale("bad slots");
            ChordId a = fresh, b = fresh + 1;
            Sign sa = decorated ? m.sign : Sign::Plus;
            Sign sb = decorated ? negate(m.sign) : Sign::Plus;
            bool a_first_over = m.over[0] == Occurrence::First;
            bool b_first_over = m.over[1] == Occurrence::First;
            Endpoint a1{a, a_first_over, sa}, a2{a, !a_first_over, sa};
            Endpoint b1{b, b_first_over, sb}, b2{b, !b_first_over, sb};
            // Insert the later pair first so the earlier slot stays valid.
            auto second = m.crossed ? std::vector<Endpoint>{a2, b2} : std::vector<Endpoint>{b2, a2};
            eps.insert(eps.begin() + static_cast<std::ptrdiff_t>(m.second_slot), second.begin(),
                       second.end());
            eps.insert(eps.begin() + static_cast<std::ptrdiff_t>(m.first_slot), {a1, b1});
          },
          [&](const R2Remove& m) {
            if (!chord_ok(m.a) || !chord_ok(m.b) || !sites.similar(m.a, m.b)) {
              throw stale("chords are not similar");
            }
            if (decorated && k.sign(m.a) == k.sign(m.b)) throw stale("chords have equal signs");
            std::erase_if(eps, [&](const Endpoint& e) { return e.label == m.a || e.label == m.b; });
          },
          [&](const R3& m) {
            if (!sites.triangle(m.pairs)) throw stale("positions do not form a triangle");
            for (std::size_t s : m.pairs) std::swap(eps[s], eps[sites.next(s)]);
          },
          [&](const Virtualize& m) {
            if (!decorated) throw stale("free diagrams carry no arrows");
            if (!chord_ok(m.chord)) throw stale("unknown chord");
            for (auto& e : eps) {
              if (e.label == m.chord) e.over = !e.over;
            }
          },
      },
      mv);
  return GaussDiagram::from_endpoints(eps, k.closed());
}

std::vector<MoveInstance> enumerate_impl(const GaussDiagram& k, MoveKindSet kinds, bool decorated) {
  std::vector<MoveInstance> out;
  const std::size_t len = k.length();
  const std::vector<Sign> sign_choices =
      decorated ? std::vector<Sign>{Sign::Plus, Sign::Minus} : std::vector<Sign>{Sign::Plus};
  const std::vector<Occurrence> over_choices =
      decorated ? std::vector<Occurrence>{Occurrence::First, Occurrence::Second}
                : std::vector<Occurrence>{Occurrence::First};

  if (kinds.contains(MoveKind::R1Add)) {
    for (std::size_t slot = 0; slot <= len; ++slot) {
      for (Sign s : sign_choices) {
        for (Occurrence o : over_choices) out.push_back(R1Add{slot, s, o});
      }
    }
  }
  if (kinds.contains(MoveKind::R1Remove)) {
    for (ChordId c : solitary_chords(k)) out.push_back(R1Remove{c});
  }
  if (kinds.contains(MoveKind::R2Add)) {
    for (std::size_t p = 0; p <= len; ++p) {
      for (std::size_t q = p; q <= len; ++q) {
        for (bool crossed : {true, false}) {
          for (Sign s : sign_choices) {
            for (Occurrence oa : over_choices) {
              for (Occurrence ob : over_choices) out.push_back(R2Add{p, q, crossed, s, {oa, ob}});
            }
          }
        }
      }
    }
  }
  if (kinds.contains(MoveKind::R2Remove)) {
    for (auto [a, b] : similar_pairs(k, decorated)) out.push_back(R2Remove{a, b});
  }
  if (kinds.contains(MoveKind::R3)) {
    for (const auto& site : triangle_sites(k)) out.push_back(R3{site});
  }
  if (decorated && kinds.contains(MoveKind::Virtualize)) {
    for (std::size_t c = 0; c < k.chord_count(); ++c) out.push_back(Virtualize{static_cast<ChordId>(c)});
  }
  return out;
}

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(rng)];
}

}  // namespace

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Add:
      return "r1-add";
    case MoveKind::R1Remove:
      return "r1-remove";
    case MoveKind::R2Add:
      return "r2-add";
    case MoveKind::R2Remove:
      return "r2-remove";
    case MoveKind::R3:
      return "r3";
    case MoveKind::Virtualize:
      return "virtualize";
  }
  return "?";
}

MoveKind parse_move_kind(std::string_view text) {
  for (auto k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3,
                 MoveKind::Virtualize}) {
    if (to_string(k) == text) return k;
  }
  throw SyntaxError("unknown move kind '" + std::string(text) + "'");
}

MoveKindSet MoveKindSet::parse(std::string_view text) {
  MoveKindSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view tok = text.substr(start, end - start);
    if (tok == "all") {
      out = all();
    } else if (tok == "r1") {
      out.insert(MoveKind::R1Add);
      out.insert(MoveKind::R1Remove);
    } else if (tok == "r2") {
      out.insert(MoveKind::R2Add);
      out.insert(MoveKind::R2Remove);
    } else if (!tok.empty()) {
      out.insert(parse_move_kind(tok));
    }
    start = end + 1;
  }
  if (out.empty()) throw SyntaxError("empty move kind list");
  return out;
}

MoveKind kind_of(const MoveInstance& mv) { return static_cast<MoveKind>(mv.index()); }

std::vector<MoveInstance> enumerate_moves(const ChordDiagram& d, MoveKindSet kinds) {
  return enumerate_impl(GaussDiagram::all_positive(d), kinds, false);
}

std::vector<MoveInstance> enumerate_moves(const GaussDiagram& k, MoveKindSet kinds) {
  return enumerate_impl(k, kinds, true);
}

ChordDiagram apply_move(const ChordDiagram& d, const MoveInstance& mv) {
  return apply_impl(GaussDiagram::all_positive(d), mv, false).underlying();
}

GaussDiagram apply_move(const GaussDiagram& k, const MoveInstance& mv) { return apply_impl(k, mv, true); }

std::optional<MoveInstance> random_move(const GaussDiagram& k, bool decorated, const WalkOptions& opts,
                                        std::mt19937_64& rng) {
  const std::size_t len = k.length();
  std::vector<MoveKind> add_kinds;
  if (opts.kinds.contains(MoveKind::R1Add) && k.chord_count() + 1 <= opts.max_chords) {
    add_kinds.push_back(MoveKind::R1Add);
  }
  if (opts.kinds.contains(MoveKind::R2Add) && k.chord_count() + 2 <= opts.max_chords) {
    add_kinds.push_back(MoveKind::R2Add);
  }

  MoveKindSet local;
  for (auto kind : {MoveKind::R1Remove, MoveKind::R2Remove, MoveKind::R3, MoveKind::Virtualize}) {
    if (opts.kinds.contains(kind)) local.insert(kind);
  }
  std::vector<MoveInstance> local_moves = local.empty() ? std::vector<MoveInstance>{}
                                                        : enumerate_impl(k, local, decorated);

  std::bernoulli_distribution want_add(opts.add_probability);
  bool add = !add_kinds.empty() && (local_moves.empty() || want_add(rng));
  if (!add) {
    if (local_moves.empty()) return std::nullopt;
    return pick(local_moves, rng);
  }

  std::uniform_int_distribution<std::size_t> slot(0, len);
  std::bernoulli_distribution coin(0.5);
  auto sign = [&] { return decorated && coin(rng) ? Sign::Minus : Sign::Plus; };
  auto over = [&] { return decorated && coin(rng) ? Occurrence::Second : Occurrence::First; };
  if (pick(add_kinds, rng) == MoveKind::R1Add) {
    std::size_t s = slot(rng);
    Sign sg = sign();
    return R1Add{s, sg, over()};
  }
  std::size_t p = slot(rng), q = slot(rng);
  if (p > q) std::swap(p, q);
  bool crossed = coin(rng);
  Sign sg = sign();
  Occurrence oa = over();
  Occurrence ob = over();
  return R2Add{p, q, crossed, sg, {oa, ob}};
}

WalkResult<GaussDiagram> random_walk(const GaussDiagram& k, std::size_t steps, std::uint64_t seed,
                                     const WalkOptions& opts) {
  std::mt19937_64 rng(seed);
  WalkResult<GaussDiagram> out{k, {}};
  for (std::size_t i = 0; i < steps; ++i) {
    auto mv = random_move(out.diagram, true, opts, rng);
    if (!mv) break;
    out.diagram = apply_move(out.diagram, *mv);
    out.log.push_back(*mv);
  }
  return out;
}

WalkResult<ChordDiagram> random_walk(const ChordDiagram& d, std::size_t steps, std::uint64_t seed,
                                     const WalkOptions& opts) {
  std::mt19937_64 rng(seed);
  GaussDiagram cur = GaussDiagram::all_positive(d);
  WalkResult<ChordDiagram> out{d, {}};
  for (std::size_t i = 0; i < steps; ++i) {
    auto mv = random_move(cur, false, opts, rng);
    if (!mv) break;
    cur = apply_impl(cur, *mv, false);
    out.log.push_back(*mv);
  }
  out.diagram = cur.underlying();
  return out;
}

namespace {

std::string occ(Occurrence o) { return o == Occurrence::First ? "first" : "second"; }
Occurrence occ_from(const std::string& s) {
  if (s == "first") return Occurrence::First;
  if (s == "second") return Occurrence::Second;
  throw SyntaxError("bad occurrence '" + s + "'");
}
Sign sign_from(int v) {
  if (v == 1) return Sign::Plus;
  if (v == -1) return Sign::Minus;
  throw SyntaxError("sign must be +1 or -1");
}

}  // namespace

void to_json(nlohmann::json& j, const MoveInstance& mv) {
  j = nlohmann::json{{"kind", to_string(kind_of(mv))}};
  std::visit(Overloaded{
                 [&](const R1Add& m) {
                   j["slot"] = m.slot;
                   j["sign"] = value(m.sign);
                   j["over"] = occ(m.over);
                 },
                 [&](const R1Remove& m) { j["chord"] = m.chord; },
                 [&](const R2Add& m) {
                   j["slots"] = {m.first_slot, m.second_slot};
                   j["crossed"] = m.crossed;
                   j["sign"] = value(m.sign);
                   j["over"] = {occ(m.over[0]), occ(m.over[1])};
                 },
                 [&](const R2Remove& m) { j["chords"] = {m.a, m.b}; },
                 [&](const R3& m) { j["pairs"] = m.pairs; },
                 [&](const Virtualize& m) { j["chord"] = m.chord; },
             },
             mv);
}

MoveInstance move_from_json(const nlohmann::json& j) {
  try {
    switch (parse_move_kind(j.at("kind").get<std::string>())) {
      case MoveKind::R1Add:
        return R1Add{j.at("slot").get<std::size_t>(), sign_from(j.at("sign").get<int>()),
                     occ_from(j.at("over").get<std::string>())};
      case MoveKind::R1Remove:
        return R1Remove{j.at("chord").get<ChordId>()};
      case MoveKind::R2Add: {
        auto slots = j.at("slots").get<std::array<std::size_t, 2>>();
        auto over = j.at("over").get<std::array<std::string, 2>>();
        return R2Add{slots[0], slots[1], j.at("crossed").get<bool>(), sign_from(j.at("sign").get<int>()),
                     {occ_from(over[0]), occ_from(over[1])}};
      }
      case MoveKind::R2Remove: {
        auto c = j.at("chords").get<std::array<ChordId, 2>>();
        return R2Remove{c[0], c[1]};
      }
      case MoveKind::R3:
        return R3{j.at("pairs").get<std::array<std::size_t, 3>>()};
      case MoveKind::Virtualize:
        return Virtualize{j.at("chord").get<ChordId>()};
    }
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("move json: ") + e.what());
  }
  throw SyntaxError("move json: unreachable kind");
}

}  // namespace parityknot
