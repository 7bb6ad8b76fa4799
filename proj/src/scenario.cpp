#include "degloci/scenario.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <mutex>
#include <set>
#include <sstream>

#include "degloci/error.hpp"
#include "degloci/sweeps.hpp"

namespace degloci {

bool TaskSpec::has(const std::string& key) const {
  return std::any_of(params.begin(), params.end(), [&](const auto& p) { return p.first == key; });
}

std::string TaskSpec::get(const std::string& key, const std::string& fallback) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return fallback;
}

int TaskSpec::get_int(const std::string& key, int fallback) const {
  if (!has(key)) return fallback;
  std::string v = get(key);
  try {
    std::size_t used = 0;
    int out = std::stoi(v, &used);
    if (used == v.size()) return out;
  } catch (const std::exception&) {
  }
  throw ParseError("task parameter " + key + " must be an integer, got \"" + v + "\"", line, 1);
}

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

std::vector<Token> split_ws(const std::string& s, int base_col = 1) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), base_col + static_cast<int>(i)});
    i = j;
  }
  return out;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::string list_text(const PolyVector& v) {
  std::vector<std::string> s;
  for (const auto& p : v) s.push_back(p.to_string());
  return join(s, ", ");
}

Json poly_list(const PolyVector& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

const std::set<std::string> kTaskKinds = {"dimension", "groebner_dump", "unit", "order_ideal", "determinantal",
                                          "bound", "coherence", "homogenize", "components", "connectedness",
                                          "p_ample", "ample", "generic_sweep", "alternating_radicals",
                                          "random_bound", "closure", "oracle"};

class Parser {
 public:
  Parser(std::string_view text, const ScenarioOptions& opts) : opts_(opts) {
    std::string cur;
    for (char c : text) {
      if (c == '\n') {
        lines_.push_back(cur);
        cur.clear();
      } else if (c != '\r') {
        cur += c;
      }
    }
    if (!cur.empty()) lines_.push_back(cur);
    s_.field = opts.characteristic ? Field(*opts.characteristic) : Field::rationals();
    if (opts.order) s_.order = *opts.order;
  }

  Scenario parse() {
    while (next_line()) statement();
    if (opts_.seed) s_.seed = *opts_.seed;
    return std::move(s_);
  }

 private:
  ScenarioOptions opts_;
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
  std::string line_;
  Scenario s_;
  bool field_seen_ = false;
  bool order_seen_ = false;

  [[noreturn]] void fail(const std::string& msg, int col = 1) const { throw ParseError(msg, line_no_, col); }

  bool next_line() {
    while (pos_ < lines_.size()) {
      line_ = lines_[pos_++];
      line_no_ = static_cast<int>(pos_);
      auto hash = line_.find('#');
      if (hash != std::string::npos) line_ = line_.substr(0, hash);
      if (line_.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }

  void require_ring() const {
    if (!s_.ring) fail("no ring declared yet");
  }

  void declare(const std::string& kind, const Token& name) {
    if (name.text == "A") fail("the name A is reserved for the base ring", name.col);
    for (const auto& [k, n] : s_.declarations)
      if (n == name.text) fail("duplicate declaration of " + name.text, name.col);
    for (char c : name.text)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') fail("invalid name " + name.text, name.col);
    s_.declarations.push_back({kind, name.text});
  }

  Polynomial poly(const RingPtr& ring, const std::string& text, int col) const {
    try {
      return Polynomial::parse(ring, text);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      auto colon = msg.find(": ");
      if (e.line() > 0 && colon != std::string::npos) msg = msg.substr(msg.find(": ", colon + 1) + 2);
      fail(msg, col + std::max(0, e.column() - 1));
    }
  }

  PolyVector poly_list_at(const RingPtr& ring, const std::string& text, int col) const {
    PolyVector out;
    int offset = 0;
    for (const auto& item : split_commas(text)) {
      if (item.find_first_not_of(" \t") == std::string::npos) fail("empty list entry", col + offset);
      out.push_back(poly(ring, item, col + offset));
      offset += static_cast<int>(item.size()) + 1;
    }
    return out;
  }

  /// Splits "head : list" and returns the head tokens; `list` receives the rest.
  std::vector<Token> head_and_list(std::string& list, int& list_col) const {
    auto colon = line_.find(':');
    if (colon == std::string::npos) fail("expected ':' followed by a polynomial list");
    list = line_.substr(colon + 1);
    list_col = static_cast<int>(colon) + 2;
    return split_ws(line_.substr(0, colon));
  }

  std::vector<PolyVector> block(const RingPtr& ring, const std::string& keyword) {
    std::vector<PolyVector> rows;
    int start = line_no_;
    while (true) {
      if (!next_line()) throw ParseError("missing 'end' for block started here", start, 1);
      auto toks = split_ws(line_);
      if (toks[0].text == "end") {
        if (toks.size() > 1) fail("unexpected text after end", toks[1].col);
        // later diagnostics about the whole object point at its declaration
        line_no_ = start;
        return rows;
      }
      if (toks[0].text != keyword) fail("expected '" + keyword + "' or 'end'", toks[0].col);
      int col = toks[0].col + static_cast<int>(keyword.size());
      rows.push_back(poly_list_at(ring, line_.substr(static_cast<std::size_t>(col - 1)), col));
    }
  }

  const FPModule& module_ref(const Token& t) const {
    auto it = s_.modules.find(t.text);
    if (it == s_.modules.end()) fail("unknown module " + t.text, t.col);
    return it->second;
  }

  static std::vector<int> ints(const std::vector<Token>& toks, std::size_t from, const Parser& p) {
    std::vector<int> out;
    for (std::size_t i = from; i < toks.size(); ++i) {
      try {
        std::size_t used = 0;
        int v = std::stoi(toks[i].text, &used);
        if (used != toks[i].text.size()) throw std::invalid_argument("");
        out.push_back(v);
      } catch (const std::exception&) {
        p.fail("expected an integer, got " + toks[i].text, toks[i].col);
      }
    }
    return out;
  }

  void expect(const std::vector<Token>& toks, std::size_t i, const std::string& word) const {
    if (toks.size() <= i || toks[i].text != word)
      fail("expected '" + word + "'", toks.size() > i ? toks[i].col : static_cast<int>(line_.size()) + 1);
  }

  void need(const std::vector<Token>& toks, std::size_t n, const std::string& usage) const {
    if (toks.size() < n) fail("usage: " + usage);
  }

  Field parse_field(const Token& t) const {
    std::string v = t.text;
    if (v == "Q" || v == "QQ" || v == "0") return Field::rationals();
    if (v.rfind("GF(", 0) == 0 && v.back() == ')') v = v.substr(3, v.size() - 4);
    else if (v[0] == 'F') v = v.substr(1);
    try {
      std::size_t used = 0;
      unsigned long p = std::stoul(v, &used);
      if (used == v.size()) return Field(static_cast<std::uint32_t>(p));
    } catch (const PreconditionError& e) {
      fail(e.what(), t.col);
    } catch (const std::exception&) {
    }
    fail("unknown field " + t.text, t.col);
  }

  void statement() {
    auto toks = split_ws(line_);
    const std::string& kw = toks[0].text;
    auto rest_after = [&](std::size_t i) {
      if (toks.size() <= i) return std::string();
      return line_.substr(static_cast<std::size_t>(toks[i].col - 1));
    };
    if (kw == "name") {
      s_.name = rest_after(1);
      while (!s_.name.empty() && std::isspace(static_cast<unsigned char>(s_.name.back()))) s_.name.pop_back();
    } else if (kw == "note") {
      std::string n = rest_after(1);
      while (!n.empty() && std::isspace(static_cast<unsigned char>(n.back()))) n.pop_back();
      s_.notes.push_back(n);
    } else if (kw == "field") {
      need(toks, 2, "field Q|<p>");
      if (s_.ring) fail("field must precede ring");
      Field f = parse_field(toks[1]);
      if (!opts_.characteristic) s_.field = f;
      field_seen_ = true;
    } else if (kw == "order") {
      need(toks, 2, "order grevlex|lex");
      if (s_.ring) fail("order must precede ring");
      if (toks[1].text != "grevlex" && toks[1].text != "lex") fail("order must be grevlex or lex", toks[1].col);
      if (!opts_.order) s_.order = parse_order_kind(toks[1].text);
      order_seen_ = true;
    } else if (kw == "seed") {
      need(toks, 2, "seed <u64>");
      try {
        s_.seed = std::stoull(toks[1].text);
      } catch (const std::exception&) {
        fail("seed must be an unsigned integer", toks[1].col);
      }
    } else if (kw == "parallel") {
      s_.parallel = true;
    } else if (kw == "ring") {
      ring_statement(toks);
    } else if (kw == "module") {
      need(toks, 2, "module NAME degrees d1 d2 ...");
      require_ring();
      declare("module", toks[1]);
      std::vector<int> degrees;
      if (toks.size() > 2) {
        expect(toks, 2, "degrees");
        degrees = ints(toks, 3, *this);
      }
      auto rels = block(s_.ring, "rel");
      try {
        s_.modules.emplace(toks[1].text, FPModule(s_.ring, degrees, rels));
      } catch (const ResourceError&) {
        throw;
      } catch (const Error& e) {
        fail(std::string("module ") + toks[1].text + ": " + e.what(), toks[1].col);
      }
    } else if (kw == "free") {
      need(toks, 3, "free NAME RANK [degrees d1 ...]");
      require_ring();
      declare("module", toks[1]);
      int rank = ints(toks, 2, *this).front();
      if (toks.size() > 3) rank = ints({toks[2]}, 0, *this).front();
      std::vector<int> degrees;
      if (toks.size() > 3) {
        expect(toks, 3, "degrees");
        degrees = ints(toks, 4, *this);
        if (static_cast<int>(degrees.size()) != rank) fail("free module: rank and degree count differ", toks[2].col);
      }
      if (rank < 0) fail("rank must be nonnegative", toks[2].col);
      s_.modules.emplace(toks[1].text, FPModule::free(s_.ring, rank, degrees));
    } else if (kw == "map") {
      map_statement(toks);
    } else if (kw == "element" || kw == "functional") {
      element_statement(kw);
    } else if (kw == "functionals") {
      need(toks, 4, "functionals NAME on MODULE");
      require_ring();
      expect(toks, 2, "on");
      const FPModule& m = module_ref(toks[3]);
      declare("functionals", toks[1]);
      auto rows = block(s_.ring, "row");
      for (const auto& r : rows) check_functional(m, r, toks[1]);
      s_.functional_lists.emplace(toks[1].text, FunctionalsDecl{toks[3].text, rows});
    } else if (kw == "pairing") {
      pairing_statement(toks);
    } else if (kw == "symalg") {
      need(toks, 4, "symalg NAME of MODULE");
      require_ring();
      expect(toks, 2, "of");
      const FPModule& m = module_ref(toks[3]);
      declare("symalg", toks[1]);
      try {
        s_.symalgs.emplace(toks[1].text, SymAlgDecl{toks[3].text, symmetric_algebra(m)});
      } catch (const ResourceError&) {
        throw;
      } catch (const Error& e) {
        fail(e.what(), toks[1].col);
      }
    } else if (kw == "lift") {
      lift_statement(toks);
    } else if (kw == "ideal") {
      ideal_statement(toks);
    } else if (kw == "task") {
      task_statement(toks);
    } else {
      fail("unknown statement " + kw, toks[0].col);
    }
  }

  void ring_statement(const std::vector<Token>& toks) {
    if (s_.ring) fail("ring declared twice");
    std::vector<std::string> vars;
    std::vector<int> weights;
    std::size_t i = 1;
    for (; i < toks.size() && toks[i].text != "weights"; ++i) {
      for (const auto& v : vars)
        if (v == toks[i].text) fail("duplicate variable " + v, toks[i].col);
      vars.push_back(toks[i].text);
    }
    if (i < toks.size()) {
      weights = ints(toks, i + 1, *this);
      if (weights.size() != vars.size()) fail("one weight per variable expected", toks[i].col);
    }
    try {
      s_.ring = PolyRing::make(s_.field, vars, s_.order, weights);
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      fail(e.what(), toks[0].col);
    }
  }

  void map_statement(const std::vector<Token>& toks) {
    need(toks, 6, "map NAME : SOURCE -> TARGET");
    require_ring();
    expect(toks, 2, ":");
    expect(toks, 4, "->");
    const FPModule& src = module_ref(toks[3]);
    const FPModule& tgt = module_ref(toks[5]);
    declare("map", toks[1]);
    auto rows = block(s_.ring, "row");
    try {
      PolyMatrix m(s_.ring, rows);
      if (rows.empty()) m = PolyMatrix(s_.ring, 0, src.num_gens());
      for (const auto& r : rows)
        if (static_cast<int>(r.size()) != src.num_gens())
          fail("map " + toks[1].text + ": each row needs one entry per generator of " + toks[3].text);
      ModuleMap f(src, tgt, m);
      if (!f.is_zero() && !f.degree()) fail("map " + toks[1].text + " is not homogeneous", toks[1].col);
      s_.maps.emplace(toks[1].text, f);
      s_.map_ends[toks[1].text] = {toks[3].text, toks[5].text};
    } catch (const ParseError&) {
      throw;
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      fail("map " + toks[1].text + ": " + e.what(), toks[1].col);
    }
  }

  void check_functional(const FPModule& m, const PolyVector& v, const Token& name) const {
    if (static_cast<int>(v.size()) != m.num_gens()) fail(name.text + ": one value per generator expected", name.col);
    std::optional<int> shift;
    for (int i = 0; i < m.num_gens(); ++i) {
      const Polynomial& p = v[static_cast<std::size_t>(i)];
      if (p.is_zero()) continue;
      auto d = p.homogeneous_degree();
      if (!d) fail(name.text + " is not homogeneous", name.col);
      int s = *d - m.gen_degree(i);
      if (shift && *shift != s) fail(name.text + " is not homogeneous", name.col);
      shift = s;
    }
    for (const auto& rel : m.relations()) {
      Polynomial acc(m.ring());
      for (std::size_t i = 0; i < rel.size(); ++i) acc += rel[i] * v[i];
      if (!acc.is_zero()) fail(name.text + " does not vanish on the relation " + to_string(rel), name.col);
    }
  }

  void element_statement(const std::string& kw) {
    require_ring();
    std::string list;
    int col = 0;
    auto toks = head_and_list(list, col);
    bool fn = kw == "functional";
    need(toks, 4, fn ? "functional NAME on MODULE : values" : "element NAME in MODULE : coordinates");
    expect(toks, 2, fn ? "on" : "in");
    const FPModule& m = module_ref(toks[3]);
    declare(kw, toks[1]);
    PolyVector v = poly_list_at(s_.ring, list, col);
    if (fn) {
      check_functional(m, v, toks[1]);
      s_.functionals.emplace(toks[1].text, ElementDecl{toks[3].text, v});
      return;
    }
    if (static_cast<int>(v.size()) != m.num_gens()) fail(toks[1].text + ": one coordinate per generator expected", col);
    if (!is_zero_vector(v) && !m.element_degree(v)) fail(toks[1].text + " is not homogeneous", toks[1].col);
    s_.elements.emplace(toks[1].text, ElementDecl{toks[3].text, v});
  }

  void pairing_statement(const std::vector<Token>& toks) {
    need(toks, 5, "pairing NAME symmetric|alternating on MODULE");
    require_ring();
    expect(toks, 3, "on");
    Flavor kind;
    if (toks[2].text == "symmetric") kind = Flavor::Symmetric;
    else if (toks[2].text == "alternating") kind = Flavor::Alternating;
    else fail("pairing kind must be symmetric or alternating", toks[2].col);
    const FPModule& m = module_ref(toks[4]);
    declare("pairing", toks[1]);
    auto rows = block(s_.ring, "row");
    try {
      PolyMatrix sq(s_.ring, rows);
      if (rows.empty()) sq = PolyMatrix(s_.ring, 0, 0);
      for (const auto& r : rows)
        if (r.size() != rows.size()) fail("pairing " + toks[1].text + ": matrix must be square");
      std::optional<int> shift;
      for (int i = 0; i < sq.rows(); ++i)
        for (int j = 0; j < sq.cols(); ++j) {
          const Polynomial& p = sq.at(i, j);
          if (p.is_zero()) continue;
          auto d = p.homogeneous_degree();
          int s = d ? *d - m.gen_degree(i) - m.gen_degree(j) : 0;
          if (!d || (shift && *shift != s)) fail("pairing " + toks[1].text + " is not homogeneous", toks[1].col);
          shift = s;
        }
      Pairing p = pairing_from_matrix(kind, m, sq);
      p.as_map();
      s_.pairings.emplace(toks[1].text, PairingDecl{toks[4].text, p});
    } catch (const ParseError&) {
      throw;
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      fail("pairing " + toks[1].text + ": " + e.what(), toks[1].col);
    }
  }

  void lift_statement(const std::vector<Token>& toks) {
    // lift NAME of F via K using S [ideal I]
    need(toks, 8, "lift NAME of FUNCTIONAL via FUNCTIONALS using SYMALG [ideal IDEAL]");
    expect(toks, 2, "of");
    expect(toks, 4, "via");
    expect(toks, 6, "using");
    auto f = s_.functionals.find(toks[3].text);
    if (f == s_.functionals.end()) fail("unknown functional " + toks[3].text, toks[3].col);
    auto k = s_.functional_lists.find(toks[5].text);
    if (k == s_.functional_lists.end()) fail("unknown functionals " + toks[5].text, toks[5].col);
    auto sa = s_.symalgs.find(toks[7].text);
    if (sa == s_.symalgs.end()) fail("unknown symalg " + toks[7].text, toks[7].col);
    if (f->second.module != sa->second.module || k->second.module != sa->second.module)
      fail("functional, functionals and symalg must refer to the same module", toks[1].col);
    LiftDecl d{toks[3].text, toks[5].text, toks[7].text, "", {}};
    Ideal I = sa->second.algebra.positive_part();
    if (toks.size() > 8) {
      expect(toks, 8, "ideal");
      need(toks, 10, "... ideal IDEAL");
      auto id = s_.ideals.find(toks[9].text);
      if (id == s_.ideals.end()) fail("unknown ideal " + toks[9].text, toks[9].col);
      if (id->second.ring != toks[7].text) fail("ideal " + toks[9].text + " must live in " + toks[7].text, toks[9].col);
      if (id->second.op != "gens" && id->second.op != "positive")
        fail("the lifting ideal must be given by generators or as positive", toks[9].col);
      d.ideal = toks[9].text;
      if (id->second.op == "gens") I = Ideal(sa->second.algebra.ring, id->second.gens);
    }
    declare("lift", toks[1]);
    try {
      d.lift = lift_phi(sa->second.algebra, f->second.values, k->second.rows, I);
    } catch (const ResourceError&) {
      throw;
    } catch (const Error& e) {
      fail("lift " + toks[1].text + ": " + e.what(), toks[1].col);
    }
    s_.lifts.emplace(toks[1].text, d);
  }

  RingPtr ring_of(const Token& t) const {
    if (t.text == "A") {
      require_ring();
      return s_.ring;
    }
    try {
      RingPtr r = s_.ring_named(t.text);
      if (r) return r;
    } catch (const Error&) {
    }
    fail("unknown ring " + t.text + " (use A, a symalg or a lift)", t.col);
  }

  void ideal_statement(const std::vector<Token>& all) {
    IdealDecl d;
    bool has_list = line_.find(':') != std::string::npos && line_.find('=') == std::string::npos;
    std::string list;
    int col = 0;
    std::vector<Token> toks = has_list ? head_and_list(list, col) : all;
    need(toks, 4, "ideal NAME in RING : gens | ideal NAME in RING = OP ARGS");
    expect(toks, 2, "in");
    RingPtr ring = ring_of(toks[3]);
    d.ring = toks[3].text;
    if (has_list) {
      if (toks.size() != 4) fail("unexpected text before ':'", toks[4].col);
      d.op = "gens";
      if (list.find_first_not_of(" \t") != std::string::npos) d.gens = poly_list_at(ring, list, col);
    } else {
      expect(toks, 4, "=");
      need(toks, 6, "ideal NAME in RING = OP ARGS");
      d.op = toks[5].text;
      for (std::size_t i = 6; i < toks.size(); ++i) d.args.push_back(toks[i].text);
      validate_ideal_op(d, toks, ring);
    }
    declare("ideal", toks[1]);
    s_.ideals.emplace(toks[1].text, d);
  }

  void validate_ideal_op(const IdealDecl& d, const std::vector<Token>& toks, const RingPtr& ring) const {
    auto arg_tok = [&](std::size_t i) { return toks[6 + i]; };
    auto need_args = [&](std::size_t lo, std::size_t hi) {
      if (d.args.size() < lo || d.args.size() > hi) fail("wrong number of arguments for " + d.op, toks[5].col);
    };
    if (d.op == "vars") {
      need_args(1, 64);
      for (std::size_t i = 0; i < d.args.size(); ++i)
        if (ring->index_of(d.args[i]) < 0) fail("unknown variable " + d.args[i], arg_tok(i).col);
    } else if (d.op == "irrelevant") {
      need_args(0, 0);
    } else if (d.op == "positive") {
      need_args(0, 0);
      if (!s_.symalgs.count(d.ring)) fail("positive needs a symalg ring", toks[3].col);
    } else if (d.op == "lift") {
      need_args(0, 0);
      if (!s_.lifts.count(d.ring)) fail("lift needs a lift ring", toks[3].col);
    } else if (d.op == "sum" || d.op == "intersect" || d.op == "saturate" || d.op == "quotient") {
      if (d.op == "sum" || d.op == "intersect") need_args(2, 64);
      else need_args(2, 2);
      for (std::size_t i = 0; i < d.args.size(); ++i) {
        auto it = s_.ideals.find(d.args[i]);
        if (it == s_.ideals.end()) fail("unknown ideal " + d.args[i], arg_tok(i).col);
        if (it->second.ring != d.ring) fail("ideal " + d.args[i] + " lives in another ring", arg_tok(i).col);
      }
    } else if (d.op == "locus") {
      need_args(2, 2);
      if (d.ring != "A") fail("locus ideals live in A", toks[3].col);
      if (!s_.maps.count(d.args[0]) && !s_.pairings.count(d.args[0]))
        fail("unknown map or pairing " + d.args[0], arg_tok(0).col);
      ints({arg_tok(1)}, 0, *this);
    } else {
      fail("unknown ideal operation " + d.op, toks[5].col);
    }
  }

  void check_ref(const TaskSpec& t, const std::string& key, const std::string& what) const {
    if (!t.has(key)) return;
    std::string v = t.get(key);
    for (const auto& name : split_commas(v)) {
      bool ok = (what == "ideal" && s_.ideals.count(name)) || (what == "map" && s_.maps.count(name)) ||
                (what == "pairing" && s_.pairings.count(name)) || (what == "module" && s_.modules.count(name)) ||
                (what == "element" && s_.elements.count(name)) ||
                (what == "functional" && s_.functionals.count(name)) || (what == "lift" && s_.lifts.count(name)) ||
                (what == "symalg" && s_.symalgs.count(name));
      if (!ok) fail("unknown " + what + " " + name + " in task " + t.kind);
    }
  }

  void task_statement(const std::vector<Token>& toks) {
    need(toks, 2, "task KIND key=value ...");
    TaskSpec t;
    t.kind = toks[1].text;
    t.line = line_no_;
    if (!kTaskKinds.count(t.kind)) fail("unknown task kind " + t.kind, toks[1].col);
    for (std::size_t i = 2; i < toks.size(); ++i) {
      auto eq = toks[i].text.find('=');
      if (eq == std::string::npos || eq == 0) fail("expected key=value", toks[i].col);
      std::string key = toks[i].text.substr(0, eq);
      if (t.has(key)) fail("duplicate parameter " + key, toks[i].col);
      t.params.push_back({key, toks[i].text.substr(eq + 1)});
    }
    for (const auto& [k, v] : std::vector<std::pair<std::string, std::string>>{
             {"ideal", "ideal"}, {"components", "ideal"}, {"map", "map"}, {"pairing", "pairing"},
             {"module", "module"}, {"sub", "element"}, {"element", "element"}, {"functional", "functional"},
             {"lift", "lift"}, {"symalg", "symalg"}})
      check_ref(t, k, v);
    auto require = [&](std::initializer_list<const char*> keys) {
      for (const char* k : keys)
        if (!t.has(k)) fail("task " + t.kind + " needs " + k + "=...", toks[1].col);
    };
    auto one_of = [&](std::initializer_list<const char*> keys) {
      int n = 0;
      for (const char* k : keys) n += t.has(k) ? 1 : 0;
      if (n != 1) {
        std::vector<std::string> names(keys.begin(), keys.end());
        fail("task " + t.kind + " needs exactly one of " + join(names, ", "), toks[1].col);
      }
    };
    const std::string& k = t.kind;
    if (k == "dimension" || k == "groebner_dump" || k == "unit" || k == "components") require({"ideal"});
    if (k == "order_ideal") one_of({"functional", "element"});
    if (k == "determinantal" || k == "coherence") {
      one_of({"map", "pairing"});
      require({"t"});
    }
    if (k == "bound") {
      one_of({"map", "pairing", "functional", "element"});
      if (t.has("map") || t.has("pairing")) require({"t"});
      if (t.has("functional")) require({"symalg"});
    }
    if (k == "homogenize") require({"lift"});
    if (k == "connectedness") {
      one_of({"map", "ideal"});
      require({"d"});
      if (t.has("map")) require({"t"});
    }
    if (k == "p_ample" || k == "ample") require({"module", "sub"});
    if (k == "generic_sweep") require({"flavor", "limit"});
    if (k == "alternating_radicals") require({"limit"});
    if (k == "closure") require({"kind"});
    for (const char* key : {"t", "d", "limit", "count", "max_vars", "max_rank", "max_level", "samples", "a_max", "n_max"})
      t.get_int(key, 0);
    if (t.has("sub")) {
      for (const auto& e : split_commas(t.get("sub")))
        if (s_.elements.at(e).module != t.get("module"))
          fail("element " + e + " does not belong to module " + t.get("module"), toks[1].col);
    }
    if (t.has("functional") && t.has("symalg") &&
        s_.functionals.at(t.get("functional")).module != s_.symalgs.at(t.get("symalg")).module)
      fail("functional and symalg refer to different modules", toks[1].col);
    s_.tasks.push_back(t);
  }
};

}  // namespace

RingPtr Scenario::ring_named(const std::string& name) const {
  if (name == "A") return ring;
  if (auto it = symalgs.find(name); it != symalgs.end()) return it->second.algebra.ring;
  if (auto it = lifts.find(name); it != lifts.end()) return it->second.lift.ring;
  throw PreconditionError("unknown ring " + name);
}

std::string Scenario::to_text() const {
  std::ostringstream out;
  if (!name.empty()) out << "name " << name << "\n";
  for (const auto& n : notes) out << "note " << n << "\n";
  out << "field " << (field.is_rational() ? std::string("Q") : std::to_string(field.characteristic())) << "\n";
  out << "order " << (order == OrderKind::Lex ? "lex" : "grevlex") << "\n";
  if (seed) out << "seed " << seed << "\n";
  if (parallel) out << "parallel\n";
  if (ring) {
    out << "ring";
    bool weighted = false;
    for (int i = 0; i < ring->nvars(); ++i) {
      out << " " << ring->var(i);
      weighted = weighted || ring->weight(i) != 1;
    }
    if (weighted) {
      out << " weights";
      for (int w : ring->weights()) out << " " << w;
    }
    out << "\n";
  }
  for (const auto& [kind, n] : declarations) {
    if (kind == "module") {
      const FPModule& m = modules.at(n);
      out << "module " << n;
      if (m.num_gens() > 0) {
        out << " degrees";
        for (int d : m.gen_degrees()) out << " " << d;
      }
      out << "\n";
      for (const auto& r : m.relations()) out << "rel " << list_text(r) << "\n";
      out << "end\n";
    } else if (kind == "map") {
      const auto& ends = map_ends.at(n);
      out << "map " << n << " : " << ends.first << " -> " << ends.second << "\n";
      const PolyMatrix& m = maps.at(n).matrix();
      for (int i = 0; i < m.rows(); ++i) out << "row " << list_text(m.row(i)) << "\n";
      out << "end\n";
    } else if (kind == "element") {
      out << "element " << n << " in " << elements.at(n).module << " : " << list_text(elements.at(n).values) << "\n";
    } else if (kind == "functional") {
      out << "functional " << n << " on " << functionals.at(n).module << " : " << list_text(functionals.at(n).values)
          << "\n";
    } else if (kind == "functionals") {
      out << "functionals " << n << " on " << functional_lists.at(n).module << "\n";
      for (const auto& r : functional_lists.at(n).rows) out << "row " << list_text(r) << "\n";
      out << "end\n";
    } else if (kind == "pairing") {
      const auto& p = pairings.at(n);
      out << "pairing " << n << " " << (p.pairing.kind == Flavor::Symmetric ? "symmetric" : "alternating") << " on "
          << p.module << "\n";
      int g = p.pairing.m.num_gens();
      for (int i = 0; i < g; ++i) {
        PolyVector row;
        for (int j = 0; j < g; ++j) row.push_back(p.pairing.value(i, j)[0]);
        out << "row " << list_text(row) << "\n";
      }
      out << "end\n";
    } else if (kind == "symalg") {
      out << "symalg " << n << " of " << symalgs.at(n).module << "\n";
    } else if (kind == "lift") {
      const auto& l = lifts.at(n);
      out << "lift " << n << " of " << l.functional << " via " << l.duals << " using " << l.symalg;
      if (!l.ideal.empty()) out << " ideal " << l.ideal;
      out << "\n";
    } else if (kind == "ideal") {
      const auto& d = ideals.at(n);
      out << "ideal " << n << " in " << d.ring;
      if (d.op == "gens") {
        out << " : " << list_text(d.gens) << "\n";
      } else {
        out << " = " << d.op;
        for (const auto& a : d.args) out << " " << a;
        out << "\n";
      }
    }
  }
  for (const auto& t : tasks) {
    out << "task " << t.kind;
    for (const auto& [k, v] : t.params) out << " " << k << "=" << v;
    out << "\n";
  }
  return out.str();
}

Scenario parse_scenario(std::string_view text, const ScenarioOptions& opts) { return Parser(text, opts).parse(); }

Scenario load_scenario(const std::string& path, const ScenarioOptions& opts) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open scenario file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  Scenario s = parse_scenario(buf.str(), opts);
  if (s.name.empty()) s.name = std::filesystem::path(path).stem().string();
  return s;
}

std::vector<std::string> corpus_files(const std::string& dir) {
  std::vector<std::string> out;
  if (!std::filesystem::is_directory(dir)) throw PreconditionError("not a directory: " + dir);
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".scn") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

class Runner {
 public:
  Runner(const Scenario& s, const RunOptions& opts) : s_(s), opts_(opts) {}

  Json run(const TaskSpec& t, int index) {
    Json rec;
    rec["task"] = index;
    rec["kind"] = t.kind;
    rec["line"] = t.line;
    if (opts_.dry_run) {
      rec["status"] = "validated";
      return rec;
    }
    try {
      rec["status"] = "ok";
      dispatch(t, rec);
    } catch (const ResourceError& e) {
      rec["status"] = "resource";
      rec["message"] = e.what();
    } catch (const HypothesisError& e) {
      rec["status"] = "error";
      rec["message"] = std::string("hypothesis: ") + e.what();
    } catch (const Error& e) {
      rec["status"] = "error";
      rec["message"] = e.what();
    }
    return rec;
  }

 private:
  const Scenario& s_;
  RunOptions opts_;
  std::mutex memo_mutex_;
  std::map<std::string, Ideal> memo_;

  Ideal ideal(const std::string& name) {
    {
      std::lock_guard<std::mutex> lock(memo_mutex_);
      if (auto it = memo_.find(name); it != memo_.end()) return it->second;
    }
    const IdealDecl& d = s_.ideals.at(name);
    RingPtr ring = s_.ring_named(d.ring);
    Ideal out;
    if (d.op == "gens") {
      out = Ideal(ring, d.gens);
    } else if (d.op == "vars") {
      std::vector<int> vars;
      for (const auto& v : d.args) vars.push_back(ring->index_of(v));
      out = Ideal::of_variables(ring, vars);
    } else if (d.op == "irrelevant") {
      out = Ideal::irrelevant(ring);
    } else if (d.op == "positive") {
      out = s_.symalgs.at(d.ring).algebra.positive_part();
    } else if (d.op == "lift") {
      out = s_.lifts.at(d.ring).lift.j;
    } else if (d.op == "sum") {
      out = ideal(d.args[0]);
      for (std::size_t i = 1; i < d.args.size(); ++i) out = out + ideal(d.args[i]);
    } else if (d.op == "intersect") {
      out = ideal(d.args[0]);
      for (std::size_t i = 1; i < d.args.size(); ++i) out = intersect(out, ideal(d.args[i]));
    } else if (d.op == "saturate") {
      out = saturate(ideal(d.args[0]), ideal(d.args[1]));
    } else if (d.op == "quotient") {
      out = quotient(ideal(d.args[0]), ideal(d.args[1]));
    } else if (d.op == "locus") {
      int t = std::stoi(d.args[1]);
      if (s_.maps.count(d.args[0])) out = determinantal_ideal(s_.maps.at(d.args[0]), t);
      else out = determinantal_ideal(s_.pairings.at(d.args[0]).pairing, t);
    }
    std::lock_guard<std::mutex> lock(memo_mutex_);
    memo_.emplace(name, out);
    return out;
  }

  std::vector<Ideal> ideal_list(const TaskSpec& t, const std::string& key) {
    std::vector<Ideal> out;
    if (!t.has(key)) return out;
    for (const auto& n : split_commas(t.get(key))) out.push_back(ideal(n));
    return out;
  }

  BoundOptions bound_options(const TaskSpec& t) const {
    BoundOptions b;
    b.a_max = t.get_int("a_max", opts_.a_max);
    return b;
  }

  static Json diagnostics(const std::vector<Diagnostic>& ds) {
    Json out = Json::object();
    for (const auto& d : ds) out[d.key] = d.value;
    return out;
  }

  static void bound_fields(const BoundReport& r, Json& rec) {
    rec["flavor"] = flavor_name(r.flavor);
    rec["t"] = r.t;
    rec["tau"] = r.tau;
    rec["dim_ambient"] = r.dim_ambient;
    rec["dim_locus"] = r.dim_locus;
    rec["verdict"] = verdict_name(r.verdict);
    rec["locus"] = poly_list(r.locus.gens());
    rec["diagnostics"] = diagnostics(r.diagnostics);
  }

  static Json dims_matrix(const std::vector<std::vector<int>>& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(row);
    return out;
  }

  static void connectedness_fields(const ComponentSet& cs, const ConnectednessResult& r, Json& rec) {
    Json comps = Json::array();
    for (const auto& c : cs.components) comps.push_back(poly_list(c.gens()));
    rec["components"] = comps;
    rec["component_dims"] = cs.dims;
    rec["provenance"] = cs.provenance == Provenance::MonomialComputed ? "monomial" : "supplied-verified";
    rec["d"] = r.d;
    rec["connected"] = r.connected;
    rec["intersection_dims"] = dims_matrix(r.intersection_dims);
    if (r.connected) rec["paths"] = r.paths;
    else if (r.small_component >= 0) rec["small_component"] = r.small_component;
    else rec["bipartition"] = r.bipartition;
    rec["certificate_valid"] = certificate_valid(r);
    if (r.conditional_on_primality) rec["primality"] = "assumed";
  }

  FPModule dual_target(const std::string& module) { return dual(s_.modules.at(module)).module; }

  void dispatch(const TaskSpec& t, Json& rec) {
    const std::string& k = t.kind;
    if (k == "dimension") {
      rec["ideal"] = t.get("ideal");
      rec["dim"] = krull_dimension(ideal(t.get("ideal")));
    } else if (k == "groebner_dump") {
      Ideal I = ideal(t.get("ideal"));
      rec["ideal"] = t.get("ideal");
      rec["ring"] = I.ring()->describe();
      rec["basis"] = poly_list(I.groebner_basis());
    } else if (k == "unit") {
      rec["ideal"] = t.get("ideal");
      rec["unit"] = ideal(t.get("ideal")).is_unit();
    } else if (k == "order_ideal") {
      order_ideal_task(t, rec);
    } else if (k == "determinantal") {
      int tt = t.get_int("t", 0);
      Ideal I = t.has("map") ? determinantal_ideal(s_.maps.at(t.get("map")), tt)
                             : determinantal_ideal(s_.pairings.at(t.get("pairing")).pairing, tt);
      rec["t"] = tt;
      rec["generators"] = poly_list(I.gens());
      rec["zero"] = I.is_zero() || I.groebner_basis().empty();
      rec["dim"] = krull_dimension(I);
    } else if (k == "bound") {
      bound_task(t, rec);
    } else if (k == "coherence") {
      coherence_task(t, rec);
    } else if (k == "homogenize") {
      homogenize_task(t, rec);
    } else if (k == "components") {
      Ideal I = ideal(t.get("ideal"));
      std::vector<Ideal> comps = ideal_list(t, "components");
      ComponentSet cs = comps.empty() ? monomial_minimal_primes(I) : verify_component_set(I, comps);
      Json list = Json::array();
      for (const auto& c : cs.components) list.push_back(poly_list(c.gens()));
      rec["components"] = list;
      rec["component_dims"] = cs.dims;
    } else if (k == "connectedness") {
      connectedness_task(t, rec);
    } else if (k == "p_ample" || k == "ample") {
      const FPModule& m = s_.modules.at(t.get("module"));
      std::vector<PolyVector> sub;
      for (const auto& e : split_commas(t.get("sub"))) sub.push_back(s_.elements.at(e).values);
      AmpleVerdict v = k == "p_ample" ? p_ample_check(sub, m, t.get_int("a_max", opts_.a_max))
                                      : ample_check(sub, m, t.get_int("n_max", 3));
      rec["levels"] = v.levels;
      rec["holds"] = v.holds;
      rec["summary"] = v.summary();
    } else if (k == "generic_sweep") {
      generic_sweep_task(t, rec);
    } else if (k == "alternating_radicals") {
      Field f = s_.field;
      Json cases = Json::array();
      bool all = true;
      for (int m = 2; m <= t.get_int("limit", 0); ++m)
        for (int tt = 0; tt + 2 <= m; tt += 2) {
          bool ok = alternating_radicals_agree(m, tt, f);
          all = all && ok;
          cases.push_back(Json::array({m, tt, ok}));
        }
      rec["cases"] = cases;
      rec["all_agree"] = all;
      if (!all) rec["status"] = "failed";
    } else if (k == "random_bound") {
      auto cases = random_bound_sweep(t.get_int("count", 20), t.get_int("max_vars", 6), t.get_int("max_rank", 3),
                                      s_.seed, s_.field);
      Json list = Json::array();
      int holds = 0;
      for (const auto& c : cases) {
        bool h = c.dim_locus >= c.dim_ambient - c.tau;
        holds += h ? 1 : 0;
        list.push_back(Json::array({c.nvars, c.rank_m, c.rank_n, c.t, c.dim_ambient, c.tau, c.dim_locus}));
      }
      rec["seed"] = s_.seed;
      rec["cases"] = list;
      rec["holds"] = holds;
      rec["total"] = cases.size();
      if (holds != static_cast<int>(cases.size())) rec["status"] = "violated";
    } else if (k == "closure") {
      std::string kind = t.get("kind");
      if (kind != "p_ample" && kind != "ample") throw PreconditionError("closure kind must be p_ample or ample");
      auto cases = closure_sweep(s_.field, kind == "p_ample", t.get_int("count", 6),
                                 t.get_int("max_level", kind == "p_ample" ? 2 : 3), s_.seed);
      std::map<int, std::array<int, 3>> by_property;  // premise held, conclusion held, inconsistent
      for (const auto& c : cases) {
        auto& e = by_property[c.property];
        e[0] += c.premise ? 1 : 0;
        e[1] += c.premise && c.conclusion ? 1 : 0;
        e[2] += c.consistent() ? 0 : 1;
      }
      Json props = Json::object();
      int bad = 0;
      for (const auto& [p, e] : by_property) {
        props[std::to_string(p)] = Json{{"premise", e[0]}, {"conclusion", e[1]}, {"inconsistent", e[2]}};
        bad += e[2];
      }
      rec["field"] = s_.field.name();
      rec["seed"] = s_.seed;
      rec["instances"] = cases.size();
      rec["properties"] = props;
      if (bad) rec["status"] = "violated";
    } else if (k == "oracle") {
      auto cases = connectedness_oracle_sweep(t.get_int("samples", 500), t.get_int("max_vars", 6), s_.seed);
      int agree = 0, connected = 0;
      Json mismatches = Json::array();
      for (const auto& c : cases) {
        agree += c.criterion == c.oracle ? 1 : 0;
        connected += c.oracle ? 1 : 0;
        if (c.criterion != c.oracle) mismatches.push_back(Json::array({c.nvars, c.supports, c.d}));
      }
      rec["seed"] = s_.seed;
      rec["comparisons"] = cases.size();
      rec["agree"] = agree;
      rec["connected"] = connected;
      if (!mismatches.empty()) {
        rec["mismatches"] = mismatches;
        rec["status"] = "violated";
      }
    }
  }

  void order_ideal_task(const TaskSpec& t, Json& rec) {
    FPModule n;
    PolyVector v;
    if (t.has("functional")) {
      const ElementDecl& f = s_.functionals.at(t.get("functional"));
      HomModule d = dual(s_.modules.at(f.module));
      auto c = d.coordinates(PolyMatrix(s_.ring, {f.values}));
      if (!c) throw PreconditionError("functional is not in the dual module");
      n = d.module;
      v = *c;
      rec["kills_relations"] = true;
    } else {
      const ElementDecl& e = s_.elements.at(t.get("element"));
      n = s_.modules.at(e.module);
      v = e.values;
    }
    Ideal I = order_ideal(n, v);
    rec["generators"] = poly_list(I.gens());
    rec["equals_irrelevant"] = I.equals(Ideal::irrelevant(s_.ring));
    rec["dim"] = krull_dimension(I);
  }

  void bound_task(const TaskSpec& t, Json& rec) {
    BoundOptions b = bound_options(t);
    BoundReport r;
    if (t.has("map")) {
      r = verify_dimension_bound(s_.maps.at(t.get("map")), t.get_int("t", 0), b);
    } else if (t.has("pairing")) {
      r = verify_dimension_bound(s_.pairings.at(t.get("pairing")).pairing, t.get_int("t", 0), b);
    } else if (t.has("functional")) {
      const SymAlgDecl& sa = s_.symalgs.at(t.get("symalg"));
      Ideal I = t.has("ideal") ? ideal(t.get("ideal")) : sa.algebra.positive_part();
      r = verify_symalg_bound(sa.algebra, s_.functionals.at(t.get("functional")).values, I, b);
    } else {
      const ElementDecl& e = s_.elements.at(t.get("element"));
      r = verify_order_bound(s_.modules.at(e.module), e.values, b);
    }
    bound_fields(r, rec);
    if (r.verdict == Verdict::Violated) rec["status"] = "violated";
  }

  void coherence_task(const TaskSpec& t, Json& rec) {
    int tt = t.get_int("t", 0);
    GenericDeterminantal g;
    PolyMatrix values;
    Ideal direct;
    if (t.has("map")) {
      const ModuleMap& f = s_.maps.at(t.get("map"));
      g = generic_determinantal_ideal(f.source(), f.target(), tt);
      values = f.matrix();
      direct = determinantal_ideal(f, tt);
    } else {
      const Pairing& p = s_.pairings.at(t.get("pairing")).pairing;
      g = generic_pairing_ideal(p.kind, p.m, p.l, tt);
      values = p.values;
      direct = determinantal_ideal(p, tt);
    }
    auto c = g.hom.coordinates(values);
    if (!c) throw PreconditionError("map is not in the Hom module");
    Ideal specialized = phi_specialize(g.sym, g.functional_of(*c), g.ideal);
    bool equal = specialized.contains(direct) && direct.contains(specialized);
    rec["t"] = tt;
    rec["generic_ring"] = g.sym.ring->describe();
    rec["specialized_equals_direct"] = equal;
    if (!equal) rec["status"] = "failed";
  }

  void homogenize_task(const TaskSpec& t, Json& rec) {
    const LiftDecl& l = s_.lifts.at(t.get("lift"));
    const SymAlgDecl& sa = s_.symalgs.at(l.symalg);
    const PolyVector& f = s_.functionals.at(l.functional).values;
    const auto& duals = s_.functional_lists.at(l.duals).rows;
    rec["lift_ring"] = l.lift.ring->describe();
    rec["j"] = poly_list(l.lift.j.gens());
    try {
      Homogenization h = psi_homogenize(l.lift, sa.algebra, f, duals);
      bool pure = std::all_of(h.images.begin(), h.images.end(),
                              [&](const Polynomial& p) { return pure_degree_one(p, l.lift.y_vars); });
      rec["in_m_dual"] = true;
      rec["t"] = poly_list(h.t);
      rec["images"] = poly_list(h.images);
      rec["certified"] = pure;
      if (!pure) rec["status"] = "failed";
    } catch (const HypothesisError& e) {
      rec["in_m_dual"] = false;
      rec["certified"] = false;
      rec["hypothesis"] = e.what();
    }
  }

  void connectedness_task(const TaskSpec& t, Json& rec) {
    int d = t.get_int("d", 0);
    std::vector<Ideal> comps = ideal_list(t, "components");
    if (t.has("map")) {
      ConnectednessReport r =
          verify_connectedness_bound(s_.maps.at(t.get("map")), t.get_int("t", 0), d, comps, bound_options(t));
      rec["tau"] = r.bound.tau;
      rec["dim_locus"] = r.bound.dim_locus;
      rec["target_d"] = r.target_d;
      if (r.target_d >= 0) {
        ComponentSet cs = comps.empty() ? monomial_minimal_primes(r.bound.locus)
                                        : verify_component_set(r.bound.locus, comps);
        connectedness_fields(cs, r.result, rec);
      }
      rec["verdict"] = verdict_name(r.verdict);
      rec["diagnostics"] = diagnostics(r.diagnostics);
      if (r.verdict == Verdict::Violated) rec["status"] = "violated";
      return;
    }
    Ideal I = ideal(t.get("ideal"));
    ComponentSet cs = comps.empty() ? monomial_minimal_primes(I) : verify_component_set(I, comps);
    bool strict = t.get("strict", "false") == "true";
    connectedness_fields(cs, connected_in_dimension(cs, d, strict), rec);
  }

  void generic_sweep_task(const TaskSpec& t, Json& rec) {
    Flavor f = parse_flavor(t.get("flavor"));
    auto cases = generic_dimension_sweep(f, t.get_int("limit", 0), s_.field);
    Json list = Json::array();
    bool all = true;
    for (const auto& c : cases) {
      int expected = 0;
      if (f == Flavor::Generic) expected = c.rows * c.cols - (c.rows - c.t) * (c.cols - c.t);
      else if (f == Flavor::Symmetric) expected = binomial(c.cols + 1, 2) - binomial(c.cols - c.t + 1, 2);
      else expected = binomial(c.cols, 2) - binomial(c.cols - c.t, 2);
      all = all && expected == c.dim;
      list.push_back(Json::array({c.rows, c.cols, c.t, c.dim, expected}));
    }
    rec["flavor"] = flavor_name(f);
    rec["cases"] = list;
    rec["all_match"] = all;
    if (!all) rec["status"] = "failed";
  }
};

}  // namespace

Report run_scenario(const Scenario& s, const RunOptions& opts) {
  Report rep;
  rep.scenario = s.name;
  Runner runner(s, opts);
  std::size_t n = s.tasks.size();
  rep.records.resize(n);
  if (s.parallel && !opts.dry_run && n > 1) {
    std::vector<std::future<Json>> futs;
    for (std::size_t i = 0; i < n; ++i)
      futs.push_back(std::async(std::launch::async, [&, i] { return runner.run(s.tasks[i], static_cast<int>(i) + 1); }));
    for (std::size_t i = 0; i < n; ++i) rep.records[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < n; ++i) rep.records[i] = runner.run(s.tasks[i], static_cast<int>(i) + 1);
  }
  int ok = 0, violated = 0, failed = 0, errors = 0, resource = 0, validated = 0;
  for (const auto& r : rep.records) {
    std::string st = r["status"];
    if (st == "ok") ++ok;
    else if (st == "violated") ++violated;
    else if (st == "failed") ++failed;
    else if (st == "resource") ++resource;
    else if (st == "validated") ++validated;
    else ++errors;
  }
  rep.exit_code = resource ? 3 : (violated || failed || errors) ? 1 : 0;
  rep.summary = Json{{"scenario", s.name},
                     {"field", s.field.name()},
                     {"tasks", n},
                     {"ok", ok},
                     {"violated", violated},
                     {"failed", failed},
                     {"errors", errors},
                     {"resource", resource}};
  if (opts.dry_run) rep.summary["validated"] = validated;
  rep.summary["exit_code"] = rep.exit_code;
  return rep;
}

std::string Report::jsonl() const {
  std::string out;
  for (const auto& r : records) out += r.dump() + "\n";
  out += Json{{"summary", summary}}.dump() + "\n";
  return out;
}

namespace {

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string Report::text() const {
  std::ostringstream out;
  out << "scenario " << scenario << "\n";
  for (const auto& r : records) {
    out << "  [" << scalar(r["task"]) << "] " << scalar(r["kind"]) << " (line " << scalar(r["line"])
        << "): " << scalar(r["status"]) << "\n";
    for (const auto& [k, v] : r.items()) {
      if (k == "task" || k == "kind" || k == "line" || k == "status") continue;
      out << "      " << k << " = " << scalar(v) << "\n";
    }
  }
  out << "  summary:";
  for (const auto& [k, v] : summary.items())
    if (k != "scenario") out << " " << k << "=" << scalar(v);
  out << "\n";
  return out.str();
}

}  // namespace degloci
