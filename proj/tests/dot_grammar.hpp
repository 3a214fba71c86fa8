#pragma once

// Recursive-descent recognizer for the Graphviz DOT language (graphs,
// subgraphs, node/edge/attribute statements, quoted and HTML-free IDs).
// Returns the node ids it saw so callers can count them.

#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace dot {

class Recognizer {
 public:
  explicit Recognizer(std::string_view text) : s_(text) {}

  // nullopt if the text is not a DOT graph
  std::optional<std::set<std::string>> parse() {
    try {
      graph();
      skip();
      if (pos_ != s_.size()) return std::nullopt;
      return nodes_;
    } catch (const Fail&) {
      return std::nullopt;
    }
  }

 private:
  struct Fail {};

  void skip() {
    for (;;) {
      while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (s_.substr(pos_, 2) == "//") {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (s_.substr(pos_, 2) == "/*") {
        auto end = s_.find("*/", pos_ + 2);
        if (end == std::string_view::npos) throw Fail{};
        pos_ = end + 2;
      } else {
        return;
      }
    }
  }

  bool peek(std::string_view tok) {
    skip();
    return s_.substr(pos_, tok.size()) == tok;
  }
  bool accept(std::string_view tok) {
    if (!peek(tok)) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) throw Fail{};
  }

  std::optional<std::string> id() {
    skip();
    if (pos_ >= s_.size()) return std::nullopt;
    char c = s_[pos_];
    if (c == '"') {
      std::string out;
      ++pos_;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
        out += s_[pos_++];
      }
      if (pos_ >= s_.size()) throw Fail{};
      ++pos_;
      return out;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return std::string(s_.substr(start, pos_ - start));
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '.') {
      std::size_t start = pos_;
      if (s_[pos_] == '-') ++pos_;
      bool digits = false;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
        digits = true;
        ++pos_;
      }
      if (!digits) {
        pos_ = start;
        return std::nullopt;
      }
      return std::string(s_.substr(start, pos_ - start));
    }
    return std::nullopt;
  }

  std::string need_id() {
    auto v = id();
    if (!v) throw Fail{};
    return *v;
  }

  bool keyword(std::string_view kw) {
    skip();
    std::size_t save = pos_;
    auto v = id();
    if (v) {
      std::string lower;
      for (char c : *v) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      if (lower == kw) return true;
    }
    pos_ = save;
    return false;
  }

  void graph() {
    keyword("strict");
    if (keyword("digraph")) {
      edge_op_ = "->";
    } else if (keyword("graph")) {
      edge_op_ = "--";
    } else {
      throw Fail{};
    }
    if (!peek("{")) need_id();
    expect("{");
    stmt_list();
    expect("}");
  }

  void stmt_list() {
    while (!peek("}")) {
      stmt();
      accept(";");
    }
  }

  void attr_list() {
    while (accept("[")) {
      while (!accept("]")) {
        need_id();
        expect("=");
        need_id();
        if (!accept(",")) accept(";");
      }
    }
  }

  void subgraph() {
    if (keyword("subgraph") && !peek("{")) need_id();
    expect("{");
    stmt_list();
    expect("}");
  }

  void node_id() {
    nodes_.insert(need_id());
    if (accept(":")) {
      need_id();
      if (accept(":")) need_id();
    }
  }

  void endpoint() {
    if (peek("{") || peek("subgraph")) {
      subgraph();
    } else {
      node_id();
    }
  }

  void stmt() {
    if (keyword("node") || keyword("edge")) {
      attr_list();
      return;
    }
    std::size_t save = pos_;
    if (keyword("graph")) {
      attr_list();
      return;
    }
    pos_ = save;
    if (!peek("{") && !peek("subgraph")) {
      // ID '=' ID
      std::size_t before = pos_;
      auto lhs = id();
      if (lhs && accept("=")) {
        need_id();
        return;
      }
      pos_ = before;
    }
    endpoint();
    while (accept(edge_op_)) endpoint();
    attr_list();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::string edge_op_ = "->";
  std::set<std::string> nodes_;
};

inline std::optional<std::set<std::string>> parse(std::string_view text) { return Recognizer(text).parse(); }

}  // namespace dot
