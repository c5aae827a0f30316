// frl -- workbench for the free group F, the group ring Z[F], and the
// first-order languages L0/L2: bounded model checking, Horn translation,
// axiom families, Stallings automata, zero-divisor probes, and the
// residual-finiteness separation pipeline.

#include <cctype>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frl/encode.hpp"
#include "frl/groupring.hpp"
#include "frl/logic/classify.hpp"
#include "frl/logic/parse.hpp"
#include "frl/logic/print.hpp"
#include "frl/modelcheck.hpp"
#include "frl/quotients.hpp"
#include "frl/session.hpp"
#include "frl/stallings.hpp"
#include "frl/zerodivisor.hpp"

using nlohmann::json;
using namespace frl;
namespace mc = frl::modelcheck;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Splits on commas that are not nested in () or [].
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  std::size_t e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

mc::Model parse_model(const std::string& text) {
  if (text == "free") return mc::Model::free_group(2);
  if (text == "zfree") return mc::Model::free_group_ring(2);
  if (text.starts_with("sym:")) {
    int n = std::stoi(text.substr(4));
    if (n < 1) throw UsageError("sym degree must be >= 1");
    return mc::Model::symmetric(n);
  }
  if (text.starts_with("zp-sym:")) {
    std::string rest = text.substr(7);
    std::size_t colon = rest.find(':');
    if (colon == std::string::npos) throw UsageError("expected zp-sym:<n>:<p>");
    int n = std::stoi(rest.substr(0, colon));
    long long p = std::stoll(rest.substr(colon + 1));
    if (n < 1) throw UsageError("zp-sym degree must be >= 1");
    bool prime = p >= 2;
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) throw UsageError("zp-sym modulus must be prime");
    return mc::Model::symmetric_ring(n, p);
  }
  throw UsageError("unknown model '" + text + "' (expected free|zfree|sym:n|zp-sym:n:p)");
}

Permutation parse_perm(const std::string& text, int degree) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw UsageError("expected permutation one-line form (i1,i2,...)");
  std::vector<int> line;
  for (const std::string& part : split_top_level(t.substr(1, t.size() - 2)))
    line.push_back(std::stoi(trim(part)));
  if (static_cast<int>(line.size()) != degree)
    throw UsageError("permutation degree does not match the model");
  return Permutation::from_one_line(line);
}

// c | c*(perm) | (perm), joined with + and -.
PermRingElem parse_perm_ring(const std::string& text, int degree, std::int64_t modulus) {
  PermRingElem out(CoeffDomain::mod(modulus));
  std::string t = trim(text);
  std::size_t i = 0;
  std::int64_t sign = 1;
  auto skip_ws = [&] {
    while (i < t.size() && t[i] == ' ') ++i;
  };
  skip_ws();
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) sign = t[i++] == '-' ? -1 : 1;
  while (i < t.size()) {
    skip_ws();
    std::int64_t coeff = 1;
    bool have_coeff = false;
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i > start) {
      coeff = std::stoll(t.substr(start, i - start));
      have_coeff = true;
      skip_ws();
      if (i < t.size() && t[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    Permutation g(degree);
    if (i < t.size() && t[i] == '(') {
      std::size_t close = t.find(')', i);
      if (close == std::string::npos) throw UsageError("unterminated permutation");
      g = parse_perm(t.substr(i, close - i + 1), degree);
      i = close + 1;
    } else if (!have_coeff) {
      throw UsageError("expected coefficient or permutation");
    }
    out.add_term(g, sign * coeff);
    skip_ws();
    if (i == t.size()) break;
    if (t[i] == '+' || t[i] == '-')
      sign = t[i++] == '-' ? -1 : 1;
    else
      throw UsageError("expected '+' or '-' between terms");
  }
  return out;
}

mc::Value parse_value(const std::string& text, const mc::Model& model, int rank) {
  std::string t = trim(text);
  switch (model.kind) {
    case mc::Model::Kind::FreeGroup: return ReducedWord::parse(t, rank);
    case mc::Model::Kind::FreeGroupRing:
      if (!t.empty() && t.front() == '[') return parse_ring_literal(t, rank);
      return FreeRingElem::embed(ReducedWord::parse(t, rank));
    case mc::Model::Kind::SymmetricGroup: return parse_perm(t, model.degree);
    case mc::Model::Kind::SymmetricGroupRing:
      return parse_perm_ring(t, model.degree, model.modulus);
  }
  throw UsageError("unreachable");
}

mc::Assignment parse_assignment(const std::string& text, const mc::Model& model, int rank) {
  mc::Assignment sigma;
  if (trim(text).empty()) return sigma;
  for (const std::string& item : split_top_level(text)) {
    std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected var=value in --assign");
    std::string var = trim(item.substr(0, eq));
    if (var.empty()) throw UsageError("empty variable name in --assign");
    sigma[var] = parse_value(item.substr(eq + 1), model, rank);
  }
  return sigma;
}

json bounds_json(const mc::DomainBounds& b) {
  return json{{"word_len", b.word_len}, {"support", b.support_size}, {"coeff", b.coeff}};
}

json assignment_json(const mc::Assignment& sigma) {
  json out = json::object();
  for (const auto& [var, value] : sigma) out[var] = mc::value_str(value);
  return out;
}

json verdict_json(const mc::Verdict& v, const SessionConfig& cfg) {
  json out{{"verdict", v.kind_str()},
           {"bounds", bounds_json(v.bounds)},
           {"assignment", nullptr},
           {"rank", cfg.rank},
           {"seed", cfg.seed}};
  if (v.assignment) out["assignment"] = assignment_json(*v.assignment);
  return out;
}

void print_verdict(const mc::Verdict& v, const SessionConfig& cfg) {
  if (cfg.output == SessionConfig::Output::Json) {
    std::cout << verdict_json(v, cfg).dump() << "\n";
    return;
  }
  std::cout << v.kind_str() << " (word-len=" << v.bounds.word_len
            << " support=" << v.bounds.support_size << " coeff=" << v.bounds.coeff << ")\n";
  if (v.assignment) {
    const char* label = v.kind == mc::Verdict::Kind::Refuted ? "counterexample" : "witness";
    std::cout << label << ":";
    for (const auto& [var, value] : *v.assignment)
      std::cout << " " << var << " = " << mc::value_str(value);
    std::cout << "\n";
  }
}

json certificate_json(const SeparationCertificate& cert) {
  json images = json::object();
  for (int g = 0; g < cert.hom.rank(); ++g) {
    std::string name(1, static_cast<char>('a' + g));
    images[name] = cert.hom.images()[g].one_line();
  }
  json terms = json::array();
  for (const auto& [perm, coeff] : cert.image.terms())
    terms.push_back(json::array({coeff, perm.one_line()}));
  return json{{"degree", cert.hom.degree()},
              {"images", images},
              {"prime", cert.prime},
              {"image_terms", terms}};
}

std::vector<ReducedWord> parse_subgroup(const std::string& text, int rank) {
  std::vector<ReducedWord> gens;
  for (const std::string& item : split_top_level(text))
    gens.push_back(ReducedWord::parse(trim(item), rank));
  if (gens.empty()) throw UsageError("empty generator list");
  return gens;
}

void print_automaton(const SubgroupAutomaton& A, const SessionConfig& cfg, json& out) {
  std::vector<std::string> basis;
  for (const ReducedWord& w : A.basis()) basis.push_back(w.str());
  if (cfg.output == SessionConfig::Output::Json) {
    json edges = json::array();
    for (const auto& [u, g, v] : A.edges())
      edges.push_back(json::array({u, std::string(1, static_cast<char>('a' + g - 1)), v}));
    out["vertices"] = A.vertex_count();
    out["edges"] = edges;
    out["rank"] = A.subgroup_rank();
    out["basis"] = basis;
  } else {
    std::cout << "vertices: " << A.vertex_count() << "\nedges: " << A.edge_count()
              << "\nrank: " << A.subgroup_rank() << "\nbasis:";
    for (const std::string& w : basis) std::cout << " " << w;
    std::cout << "\n";
  }
}

int run(int argc, char** argv) {
  SessionConfig cfg;
  CLI::App app{"free group ring workbench"};
  app.require_subcommand(1);
  app.add_option("-k,--rank", cfg.rank, "free group rank (>= 2)")
      ->envname("FRL_RANK")
      ->check(CLI::Range(2, kMaxRank));
  app.add_option("--seed", cfg.seed, "seed for randomized searches")->envname("FRL_SEED");
  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit JSON instead of text");

  std::string sentence_text, model_text = "zfree", formula_text, assign_text, element_text;
  std::string family, constants_text, subgroup_text, member_text, left_text, right_text;
  std::string lang_text = "l2";
  int n_max = 6, depth = 1, max_degree = 12, radius = 3;
  std::string zd_model = "zfree";
  mc::DomainBounds bounds;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a quantifier-free formula")->fallthrough();
  eval->add_option("--model", model_text, "free|zfree|sym:n|zp-sym:n:p")->required();
  eval->add_option("--formula", formula_text, "quantifier-free formula")->required();
  eval->add_option("--assign", assign_text, "comma-separated var=value bindings");

  CLI::App* check = app.add_subcommand("check", "bounded universal/existential checking")->fallthrough();
  check->add_option("--model", model_text, "free|zfree|sym:n|zp-sym:n:p")->required();
  check->add_option("--sentence", sentence_text, "prenex sentence")->required();
  check->add_option("--word-len", bounds.word_len, "group-sort word length bound");
  check->add_option("--support", bounds.support_size, "ring-sort support bound");
  check->add_option("--coeff", bounds.coeff, "ring-sort coefficient bound");

  CLI::App* translate = app.add_subcommand("translate", "primitive sentence to strict Horn form")->fallthrough();
  translate->add_option("--sentence", sentence_text, "primitive L0 sentence")->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "syntactic classification flags")->fallthrough();
  classify_cmd->add_option("--sentence", sentence_text, "sentence")->required();
  classify_cmd->add_option("--lang", lang_text, "l0|l2 (default l2)");

  CLI::App* axioms = app.add_subcommand("axioms", "emit axiom families")->fallthrough();
  axioms->add_option("--family", family, "torsion|rct|ct|square-zero")->required();
  axioms->add_option("--n-max", n_max, "largest torsion exponent (default 6)");

  CLI::App* diagram = app.add_subcommand("diagram", "finite diagram fragment of Z[F]")->fallthrough();
  diagram->add_option("--constants", constants_text, "comma-separated words/literals")->required();
  diagram->add_option("--depth", depth, "closure depth (default 1)");

  CLI::App* separate = app.add_subcommand("separate", "residual-finiteness certificate")->fallthrough();
  separate->add_option("--element", element_text, "nonzero element of Z[F]")->required();
  separate->add_option("--max-degree", max_degree, "separation search budget (default 12)");

  CLI::App* zerodiv = app.add_subcommand("zerodivisor", "exact annihilator probe")->fallthrough();
  zerodiv->add_option("--element", element_text, "nonzero element")->required();
  zerodiv->add_option("--radius", radius, "candidate support radius (default 3)");
  zerodiv->add_option("--model", zd_model, "zfree|zcyc:n (default zfree)");

  CLI::App* stallings = app.add_subcommand("stallings", "subgroup automaton")->fallthrough();
  stallings->add_option("--subgroup", subgroup_text, "comma-separated generators")->required();
  stallings->add_option("--member", member_text, "word to test for membership");

  CLI::App* intersect = app.add_subcommand("intersect", "Howson intersection")->fallthrough();
  intersect->add_option("--left", left_text, "comma-separated generators")->required();
  intersect->add_option("--right", right_text, "comma-separated generators")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2; // --help exits 0, usage errors exit 2
  }

  cfg.output = json_mode ? SessionConfig::Output::Json : SessionConfig::Output::Text;
  std::cerr << "# frl seed=" << cfg.seed << " rank=" << cfg.rank << "\n";
  json out = json::object();
  out["rank"] = cfg.rank;
  out["seed"] = cfg.seed;

  if (*eval) {
    mc::Model model = parse_model(model_text);
    model.rank = cfg.rank;
    mc::Assignment sigma = parse_assignment(assign_text, model, cfg.rank);
    std::set<std::string> vars;
    for (const auto& [v, value] : sigma) vars.insert(v);
    logic::FormulaPtr matrix = logic::parse_matrix(formula_text, model.lang(), cfg.rank, vars);
    bool value = mc::eval_qf(matrix, sigma, model);
    if (json_mode) {
      out["value"] = value;
      std::cout << out.dump() << "\n";
    } else {
      std::cout << (value ? "true" : "false") << "\n";
    }
    return value ? 0 : 1;
  }

  if (*check) {
    mc::Model model = parse_model(model_text);
    model.rank = cfg.rank;
    logic::Sentence s = logic::parse_sentence(sentence_text, model.lang(), cfg.rank);
    bool universal = true, existential = true;
    for (const auto& q : s.prefix) (q.universal ? existential : universal) = false;
    if (!universal && !existential)
      throw UsageError("mixed quantifier prefixes are not supported");
    mc::Verdict v = universal ? mc::check_universal_bounded(s, bounds, model)
                              : mc::witness_search(s, bounds, model);
    print_verdict(v, cfg);
    bool good = v.kind == mc::Verdict::Kind::HoldsAtBound || v.kind == mc::Verdict::Kind::Witness;
    return good ? 0 : 1;
  }

  if (*translate) {
    logic::Sentence s = logic::parse_sentence(sentence_text, logic::Lang::L0, cfg.rank);
    logic::Sentence horn = encode::primitive_to_horn(s);
    if (json_mode) {
      out["horn"] = logic::print_sentence(horn);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << logic::print_sentence(horn) << "\n";
    }
    return 0;
  }

  if (*classify_cmd) {
    if (lang_text != "l0" && lang_text != "l2") throw UsageError("--lang must be l0 or l2");
    logic::Lang lang = lang_text == "l0" ? logic::Lang::L0 : logic::Lang::L2;
    logic::Classification c =
        logic::classify(logic::parse_sentence(sentence_text, lang, cfg.rank));
    const std::pair<const char*, bool> flags[] = {
        {"universal", c.universal},
        {"existential", c.existential},
        {"primitive", c.primitive},
        {"basicHorn", c.basic_horn},
        {"strictBasicHorn", c.strict_basic_horn},
        {"horn", c.horn},
        {"strictUniversalHorn", c.strict_universal_horn},
        {"quasiIdentity", c.quasi_identity},
    };
    if (json_mode) {
      for (const auto& [name, value] : flags) out[name] = value;
      std::cout << out.dump() << "\n";
    } else {
      bool first = true;
      for (const auto& [name, value] : flags)
        if (value) {
          std::cout << (first ? "" : ", ") << name;
          first = false;
        }
      std::cout << (first ? "(none)\n" : "\n");
    }
    return 0;
  }

  if (*axioms) {
    std::vector<logic::Sentence> sentences;
    if (family == "torsion") {
      if (n_max < 2) throw UsageError("--n-max must be >= 2");
      for (int n = 2; n <= n_max; ++n) {
        auto [g, r] = encode::torsion_axiom(n);
        sentences.push_back(std::move(g));
        sentences.push_back(std::move(r));
      }
    } else if (family == "rct") {
      sentences.push_back(encode::rct_axiom());
    } else if (family == "ct") {
      sentences.push_back(encode::ct_axiom_group());
    } else if (family == "square-zero") {
      sentences.push_back(encode::square_zero_axiom());
    } else {
      throw UsageError("unknown family '" + family + "'");
    }
    if (json_mode) {
      json arr = json::array();
      for (const auto& s : sentences) arr.push_back(logic::print_sentence(s));
      out["family"] = family;
      out["sentences"] = arr;
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& s : sentences) std::cout << logic::print_sentence(s) << "\n";
    }
    return 0;
  }

  if (*diagram) {
    std::vector<FreeRingElem> constants;
    for (const std::string& item : split_top_level(constants_text)) {
      std::string t = trim(item);
      if (!t.empty() && t.front() == '[')
        constants.push_back(parse_ring_literal(t, cfg.rank));
      else
        constants.push_back(FreeRingElem::embed(ReducedWord::parse(t, cfg.rank)));
    }
    std::vector<logic::Sentence> sentences = encode::diagram_fragment(constants, depth);
    if (json_mode) {
      json arr = json::array();
      for (const auto& s : sentences) arr.push_back(logic::print_sentence(s));
      out["sentences"] = arr;
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& s : sentences) std::cout << logic::print_sentence(s) << "\n";
    }
    return 0;
  }

  if (*separate) {
    FreeRingElem r = parse_ring_literal(element_text, cfg.rank);
    if (r.is_zero()) throw UsageError("--element must be nonzero");
    SearchConfig search;
    search.seed = cfg.seed;
    auto cert = separate_ring_element(r, max_degree, search);
    if (!cert) {
      std::cerr << "not-found: no separating homomorphism within degree " << max_degree << "\n";
      return 1;
    }
    json c = certificate_json(*cert);
    c["rank"] = cfg.rank;
    c["seed"] = cfg.seed;
    c["verified"] = verify_certificate(*cert, r);
    std::cout << c.dump() << "\n";
    return 0;
  }

  if (*zerodiv) {
    std::optional<std::string> witness;
    if (zd_model == "zfree") {
      FreeRingElem u = parse_ring_literal(element_text, cfg.rank);
      auto w = zero_divisor_probe(u, radius, cfg.rank);
      if (w) witness = ring_literal_str(*w);
    } else if (zd_model.starts_with("zcyc:")) {
      int n = std::stoi(zd_model.substr(5));
      if (n < 1) throw UsageError("zcyc order must be >= 1");
      // powers of the single generator a, reduced mod the cycle order
      FreeRingElem u = parse_ring_literal(element_text, 1);
      PermRingElem cyc;
      Permutation g = Permutation::cycle(n);
      for (const auto& [w, c] : u.terms()) {
        long long e = 0;
        for (Letter l : w.letters()) e += l > 0 ? 1 : -1;
        e = ((e % n) + n) % n;
        Permutation img(n);
        for (long long i = 0; i < e; ++i) img = img * g;
        cyc.add_term(img, c);
      }
      if (cyc.is_zero()) throw UsageError("element reduces to zero in Z[C_n]");
      auto w = zero_divisor_probe(cyc, cyclic_group(n));
      if (w) witness = perm_ring_str(*w);
    } else {
      throw UsageError("unknown zerodivisor model '" + zd_model + "'");
    }
    if (json_mode) {
      out["witness"] = witness ? json(*witness) : json(nullptr);
      std::cout << out.dump() << "\n";
    } else {
      std::cout << (witness ? "annihilator: " + *witness : "none") << "\n";
    }
    return witness ? 0 : 1;
  }

  if (*stallings) {
    SubgroupAutomaton A =
        SubgroupAutomaton::build(parse_subgroup(subgroup_text, cfg.rank), cfg.rank);
    print_automaton(A, cfg, out);
    int code = 0;
    if (!member_text.empty()) {
      bool is_member = A.member(ReducedWord::parse(member_text, cfg.rank));
      if (json_mode)
        out["member"] = is_member;
      else
        std::cout << "member: " << (is_member ? "true" : "false") << "\n";
      code = is_member ? 0 : 1;
    }
    if (json_mode) std::cout << out.dump() << "\n";
    return code;
  }

  if (*intersect) {
    SubgroupAutomaton A = SubgroupAutomaton::build(parse_subgroup(left_text, cfg.rank), cfg.rank);
    SubgroupAutomaton B = SubgroupAutomaton::build(parse_subgroup(right_text, cfg.rank), cfg.rank);
    print_automaton(A.intersect(B), cfg, out);
    if (json_mode) std::cout << out.dump() << "\n";
    return 0;
  }

  return 2;
}

} // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
