#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "preheap/boolean_lattice.hpp"
#include "preheap/contracts.hpp"
#include "preheap/heap.hpp"
#include "preheap/ia_corpus.hpp"
#include "preheap/interface_automata.hpp"
#include "preheap/languages.hpp"
#include "preheap/oracle.hpp"
#include "preheap/serialize.hpp"
#include "preheap/sieve.hpp"

namespace {

using namespace preheap;

// Exit status taxonomy: 0 success, 2 validation failure, 3 theory-level
// undefined result, 4 verification failure (closed form contradicted by an
// oracle; must fail loudly).
constexpr int kOk = 0;
constexpr int kValidation = 2;
constexpr int kUndefined = 3;
constexpr int kVerificationFailed = 4;

// Verification-on-by-default thresholds: exhaustive oracles run only while
// the carrier stays desk-sized.
constexpr std::size_t kMaxBoolAtomsVerified = 10;
constexpr std::size_t kMaxContractBehaviorsVerified = 6;

struct Options {
  std::string theory;
  std::string op;
  std::string a_path;
  std::string b_path;
  std::string sieve_path;
  std::string out_path;
  std::size_t bound = 3;
  std::uint64_t seed = 1;
  std::size_t witness_cap = 10;
  bool no_verify = false;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open input file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw ValidationError("file '" + path + "' is not valid JSON: " + e.what());
  }
}

void write_document(const Options& opt, const Json& doc) {
  if (opt.out_path.empty()) return;
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw ValidationError("cannot open output file '" + opt.out_path + "'");
  out << doc.dump(2) << "\n";
}

Json base_document(const Options& opt) {
  return Json{{"theory", opt.theory},
              {"op", opt.op},
              {"status", "ok"},
              {"options", Json{{"bound", opt.bound}, {"seed", opt.seed}}}};
}

enum class SolveKind { Right, Left, Compose, Merge, Separate };

std::optional<SolveKind> solve_kind(const std::string& op) {
  if (op == "solve-right") return SolveKind::Right;
  if (op == "solve-left") return SolveKind::Left;
  if (op == "compose") return SolveKind::Compose;
  if (op == "merge") return SolveKind::Merge;
  if (op == "separate") return SolveKind::Separate;
  return std::nullopt;
}

template <Heap H>
typename H::Element apply_op(const H& h, SolveKind kind, const typename H::Element& a,
                             const typename H::Element& b) {
  switch (kind) {
    case SolveKind::Right: return quotient_right(h, a, b);
    case SolveKind::Left: return quotient_left(h, a, b);
    case SolveKind::Compose: return h.mu(a, b);
    case SolveKind::Merge: return tau(h, a, b);
    case SolveKind::Separate: return smallest_tau_solution(h, b, a);
  }
  throw ValidationError("unreachable");
}

// ---- enumerable theories (bool, agc) --------------------------------------

template <EnumerableHeap H, typename Emit>
int run_enumerable(const H& h, const Options& opt, const typename H::Element& a,
                   const typename H::Element& b, bool verifiable, Emit emit, Json& doc) {
  int status = kOk;
  if (const auto kind = solve_kind(opt.op)) {
    const auto result = apply_op(h, *kind, a, b);
    doc["result"] = emit(result);
    const bool is_division = *kind == SolveKind::Right || *kind == SolveKind::Left;
    if (is_division && !opt.no_verify) {
      if (verifiable) {
        const Side side = *kind == SolveKind::Right ? Side::Right : Side::Left;
        const bool ok = verify_quotient(h, a, b, side);
        doc["verification"] = Json{{"performed", true},
                                   {"method", "exhaustive-enumeration"},
                                   {"solution", ok},
                                   {"maximal", ok}};
        if (!ok) {
          doc["status"] = "verification-failed";
          status = kVerificationFailed;
        }
      } else {
        doc["verification"] =
            Json{{"performed", false}, {"reason", "carrier above verification threshold"}};
        doc["result_unverified"] = true;
      }
    }
  } else if (opt.op == "refine") {
    doc["result"] = Json{{"refines", h.le(a, b)}};
  } else if (opt.op == "oracle-verify") {
    if (!verifiable) throw ValidationError("carrier too large for the exhaustive oracle");
    const bool right = verify_quotient(h, a, b, Side::Right);
    const bool left = verify_quotient(h, a, b, Side::Left);
    doc["result"] = Json{{"verified", right && left}, {"right", right}, {"left", left}};
    if (!(right && left)) {
      doc["status"] = "verification-failed";
      status = kVerificationFailed;
    }
  } else if (opt.op == "axioms") {
    if (!verifiable) throw ValidationError("carrier too large for exhaustive axiom checking");
    const auto report = check_axioms(h, opt.witness_cap);
    doc["result"] = to_json(report);
    const auto probe = identity_probe(h);
    if (probe) {
      doc["result"]["identity"] = emit(probe->identity);
      doc["result"]["identity_report"] = to_json(probe->report);
    } else {
      doc["result"]["identity"] = nullptr;
    }
  } else {
    throw ValidationError("operation '" + opt.op + "' is not defined for theory " + opt.theory);
  }
  return status;
}

int run_bool(const Options& opt, Json& doc) {
  const auto a = finite_set_from_json(read_json_file(opt.a_path));
  const auto b = opt.op == "axioms" ? a : finite_set_from_json(read_json_file(opt.b_path));
  BooleanLattice heap(a.universe());
  doc["inputs"] = Json{{"a", to_json(a)}, {"b", to_json(b)}};
  const bool verifiable = a.universe().size() <= kMaxBoolAtomsVerified;
  return run_enumerable(heap, opt, a, b, verifiable, [](const FiniteSet& s) { return to_json(s); },
                        doc);
}

int run_agc(const Options& opt, Json& doc) {
  const auto a = contract_from_json(read_json_file(opt.a_path));
  const auto b = opt.op == "axioms" ? a : contract_from_json(read_json_file(opt.b_path));
  ContractHeap heap(a.universe());
  doc["inputs"] = Json{{"a", to_json(a)}, {"b", to_json(b)}};
  const bool verifiable = a.universe().size() <= kMaxContractBehaviorsVerified;
  return run_enumerable(heap, opt, a, b, verifiable, [](const Contract& c) { return to_json(c); },
                        doc);
}

// ---- interface automata ----------------------------------------------------

Json verify_ia_division(const IaHeap& h, const InterfaceAutomaton& a,
                        const InterfaceAutomaton& b, const InterfaceAutomaton& q, Side side,
                        std::uint64_t seed, bool& failed) {
  Json v{{"performed", true}, {"method", "sampled-candidates"}};
  try {
    const auto composed = side == Side::Right ? h.mu(a, q) : h.mu(q, a);
    const bool ok = h.le(composed, b);
    v["solution"] = ok;
    if (!ok) failed = true;
  } catch (const TheoryError& e) {
    v["solution"] = "composition-undefined";
    v["composition_error"] = e.what();
  }

  IaCorpus corpus(CorpusParams{4, 3, seed});
  std::size_t accepted = 0, dominated = 0;
  auto candidates = corpus.restrictions(q, 4);
  for (std::size_t i = 0; i < 8; ++i) candidates.push_back(corpus.candidate_like(q));
  for (const auto& r : candidates) {
    try {
      const auto composed = side == Side::Right ? h.mu(a, r) : h.mu(r, a);
      if (!h.le(composed, b)) continue;
    } catch (const TheoryError&) {
      continue;
    }
    ++accepted;
    if (h.le(r, q)) ++dominated;
  }
  v["candidates_accepted"] = accepted;
  v["candidates_dominated"] = dominated;
  if (dominated != accepted) failed = true;
  return v;
}

int run_ia(const Options& opt, Json& doc) {
  if (opt.op == "axioms") {
    const auto check = run_corpus_checks(CorpusParams{4, 3, opt.seed}, 40, 10);
    doc["result"] = to_json(check.report);
    doc["result"]["corpus"] = Json{{"automata", check.automata},
                                   {"refining_pairs", check.refining_pairs},
                                   {"quotient_pairs", check.quotient_pairs},
                                   {"quotients_defined", check.quotients_defined},
                                   {"compositions_evaluated", check.compositions_evaluated},
                                   {"candidates_accepted", check.candidates_accepted}};
    return check.report.ok() ? kOk : kVerificationFailed;
  }

  const IaHeap h;
  const auto a = automaton_from_json(read_json_file(opt.a_path));
  const auto b = automaton_from_json(read_json_file(opt.b_path));
  doc["inputs"] = Json{{"a", to_json(a)}, {"b", to_json(b)}};

  int status = kOk;
  if (const auto kind = solve_kind(opt.op)) {
    const auto result = apply_op(h, *kind, a, b);
    doc["result"] = to_json(result);
    const bool is_division = *kind == SolveKind::Right || *kind == SolveKind::Left;
    if (is_division && !opt.no_verify) {
      bool failed = false;
      const Side side = *kind == SolveKind::Right ? Side::Right : Side::Left;
      doc["verification"] = verify_ia_division(h, a, b, result, side, opt.seed, failed);
      if (failed) {
        doc["status"] = "verification-failed";
        status = kVerificationFailed;
      }
    }
  } else if (opt.op == "refine") {
    doc["result"] = Json{{"refines", refines(a, b)}};
  } else if (opt.op == "oracle-verify") {
    bool failed = false;
    const auto q = quotient_right(h, a, b);
    doc["result"] = verify_ia_division(h, a, b, q, Side::Right, opt.seed, failed);
    if (failed) {
      doc["status"] = "verification-failed";
      status = kVerificationFailed;
    }
  } else {
    throw ValidationError("operation '" + opt.op + "' is not defined for theory ia");
  }
  return status;
}

// ---- languages --------------------------------------------------------------

LanguageSieve::Mode mode_of(const std::string& theory) {
  return theory == "lang-sync" ? LanguageSieve::Mode::Sync : LanguageSieve::Mode::Async;
}

LanguageSieve build_sieve(const Options& opt, const Dfa& a, const Dfa* b) {
  if (!opt.sieve_path.empty()) {
    auto sieve = sieve_from_json(read_json_file(opt.sieve_path));
    if (sieve.mode() != mode_of(opt.theory))
      throw ValidationError("sieve file mode disagrees with --theory");
    return sieve;
  }
  // Registration order defaults to encounter order: a's components, then b's.
  AlphabetRegistry registry;
  for (const auto& c : a.alphabet().components()) registry.add(c);
  if (b)
    for (const auto& c : b->alphabet().components())
      if (!registry.has(c.id)) registry.add(c);
  return LanguageSieve(std::move(registry), mode_of(opt.theory));
}

void require_kind(const Dfa& d, LanguageSieve::Mode mode, const char* which) {
  const auto expected = mode == LanguageSieve::Mode::Sync ? AlphabetKind::Tuple : AlphabetKind::Union;
  if (d.alphabet().kind() != expected)
    throw ValidationError(std::string("operand ") + which +
                          (expected == AlphabetKind::Tuple ? " needs a tuple alphabet"
                                                           : " needs a union alphabet"));
}

Json emit_language(const Dfa& d, std::size_t bound) {
  return Json{{"dfa", to_json(d)}, {"words_le_bound", bounded_word_dump(d, bound)}};
}

int run_lang(const Options& opt, Json& doc) {
  const auto a = language_from_json(read_json_file(opt.a_path));

  if (opt.op == "axioms") {
    const auto sieve = build_sieve(opt, a, nullptr);
    require_kind(a, sieve.mode(), "a");
    // One sample pool per registered alphabet plus the full join index.
    std::vector<SieveIndex> indices;
    SieveIndex everything;
    for (const auto& c : sieve.registry().all()) {
      indices.push_back({c.id});
      everything.insert(c.id);
    }
    if (everything.size() > 1) indices.push_back(everything);
    std::vector<Dfa> elems{a};
    std::uint64_t seed = opt.seed;
    for (const auto& idx : indices) {
      elems.push_back(empty_language(sieve.alphabet_at(idx)));
      elems.push_back(full_language(sieve.alphabet_at(idx)));
      for (auto& d : sample_languages(sieve, idx, 3, opt.bound, seed++)) elems.push_back(d);
    }
    const auto report = check_sieve(sieve, elems, opt.witness_cap);
    doc["result"] = to_json(report);
    doc["result"]["sampled_elements"] = elems.size();
    return report.ok() ? kOk : kVerificationFailed;
  }

  const auto b = language_from_json(read_json_file(opt.b_path));
  const auto sieve = build_sieve(opt, a, &b);
  require_kind(a, sieve.mode(), "a");
  require_kind(b, sieve.mode(), "b");
  const SievedHeap<LanguageSieve> h(sieve);
  doc["inputs"] = Json{{"a", emit_language(a, opt.bound)}, {"b", emit_language(b, opt.bound)}};

  int status = kOk;
  if (const auto kind = solve_kind(opt.op)) {
    const auto result = apply_op(h, *kind, a, b);
    doc["result"] = emit_language(result, opt.bound);
    const bool is_division = *kind == SolveKind::Right || *kind == SolveKind::Left;
    if (is_division && !opt.no_verify) {
      // mu is commutative here, so both divisions verify against the same oracle.
      const bool solves = h.le(h.mu(a, result), b);
      const bool maximal = pointwise_maximality(sieve, a, b, result, opt.bound);
      doc["verification"] = Json{{"performed", true},
                                 {"method", "pointwise-maximality"},
                                 {"bound", opt.bound},
                                 {"solution", solves},
                                 {"maximal", maximal}};
      if (!solves || !maximal) {
        doc["status"] = "verification-failed";
        status = kVerificationFailed;
      }
    }
  } else if (opt.op == "refine") {
    doc["result"] = Json{{"refines", h.le(a, b)}};
  } else if (opt.op == "oracle-verify") {
    const auto z = quotient_right(h, a, b);
    const bool solves = h.le(h.mu(a, z), b);
    const bool maximal = pointwise_maximality(sieve, a, b, z, opt.bound);
    doc["result"] = Json{{"verified", solves && maximal},
                         {"solution", solves},
                         {"maximal", maximal},
                         {"bound", opt.bound}};
    if (!solves || !maximal) {
      doc["status"] = "verification-failed";
      status = kVerificationFailed;
    }
  } else {
    throw ValidationError("operation '" + opt.op + "' is not defined for language theories");
  }
  return status;
}

int run(const Options& opt) {
  Json doc = base_document(opt);
  int status;
  try {
    if (opt.theory == "bool") {
      status = run_bool(opt, doc);
    } else if (opt.theory == "agc") {
      status = run_agc(opt, doc);
    } else if (opt.theory == "ia") {
      status = run_ia(opt, doc);
    } else if (opt.theory == "lang-sync" || opt.theory == "lang-async") {
      status = run_lang(opt, doc);
    } else {
      throw ValidationError("unknown theory '" + opt.theory + "'");
    }
  } catch (const TheoryError& e) {
    doc["status"] = "undefined";
    doc["error"] = e.what();
    write_document(opt, doc);
    std::cout << opt.theory << " " << opt.op << ": undefined (" << e.what() << ")\n";
    return kUndefined;
  }

  write_document(opt, doc);
  std::cout << opt.theory << " " << opt.op << ": " << doc["status"].get<std::string>() << "\n";
  if (doc.contains("result") && doc["result"].is_object() && doc["result"].contains("refines"))
    std::cout << "refines: " << (doc["result"]["refines"].get<bool>() ? "true" : "false") << "\n";
  if (doc.contains("verification"))
    std::cout << "verification: " << doc["verification"].dump() << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"preorder-heap algebra workbench: quotients, compositions and axiom checks\n"
               "for Boolean lattices, AG contracts, interface automata and language heaps"};
  Options opt;
  app.add_option("--theory", opt.theory, "bool | agc | ia | lang-sync | lang-async")->required();
  app.add_option("--op", opt.op,
                 "solve-right | solve-left | compose | merge | separate | refine | axioms | "
                 "oracle-verify")
      ->required();
  app.add_option("--a", opt.a_path, "operand A (JSON file)");
  app.add_option("--b", opt.b_path, "operand B (JSON file)");
  app.add_option("--sieve", opt.sieve_path, "sieve description file (language theories)");
  app.add_option("--bound", opt.bound, "word-length bound for language checks (default 3)");
  app.add_option("--seed", opt.seed, "seed for sampled checks (default 1)");
  app.add_option("--witness-cap", opt.witness_cap, "max reported witnesses per axiom");
  app.add_flag("--no-verify", opt.no_verify, "skip verification of solve results");
  app.add_option("--out", opt.out_path, "write the machine-readable result document here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidation;
  }

  const bool needs_a = !(opt.theory == "ia" && opt.op == "axioms");
  const bool needs_b = needs_a && opt.op != "axioms";
  try {
    if (needs_a && opt.a_path.empty()) throw ValidationError("--a is required for this operation");
    if (needs_b && opt.b_path.empty()) throw ValidationError("--b is required for this operation");
    return run(opt);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
