// Command-line front end: verification campaigns, statistic reports, and the
// built-in worked-example replay.
//
// Exit codes: 0 = verified / pass, 1 = mathematical counterexample found,
// 2 = usage or configuration error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ruffles/io.hpp"
#include "ruffles/lumping.hpp"
#include "ruffles/oriented.hpp"
#include "ruffles/parallel.hpp"
#include "ruffles/perm.hpp"
#include "ruffles/shuffles.hpp"
#include "ruffles/verify.hpp"
#include "ruffles/words.hpp"
#include "ruffles/worked_examples.hpp"

namespace {

using namespace ruffles;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string map = "riffle";
  std::string group = "sym";
  std::string stat;
  std::string source_stat = "hand";
  std::string target_stat;
  std::string format = "text";
  std::string out_path;
  std::string word, perm_map, perm_deck;
  std::vector<int> radices;
  int n = 5;
  int max_radix = 3;
  int workers = 0;  // 0 = resolve from RUFFLES_WORKERS, else 1
  bool corrupt = false;
  bool sabotage = false;
};

int resolve_workers(int requested) {
  return requested >= 1 ? requested : default_worker_count();
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file: " + out_path);
  file << content;
}

int cmd_check_examples(const Options& opt) {
  const int failures = run_worked_examples(std::cout, opt.sabotage);
  if (failures > 0) {
    std::cout << failures << " worked example(s) failed\n";
    return kExitCounterexample;
  }
  std::cout << "all worked examples verified\n";
  return kExitPass;
}

int cmd_verify_reaction(const Options& opt) {
  if (opt.radices.size() != 2)
    throw std::invalid_argument("--radices wants exactly two values, e.g. --radices 2,3");
  const int workers = resolve_workers(opt.workers);
  std::cerr << "checking " << opt.map << " reaction, n=" << opt.n << ", radices ("
            << opt.radices[0] << "," << opt.radices[1] << ")\n";
  const ReactionSuiteResult res =
      run_reaction_suite(opt.map, opt.n, opt.radices[0], opt.radices[1], opt.corrupt, workers);
  if (!res.pass) {
    std::cout << "reaction law fails at m=" << res.witness_m << ", n=" << res.witness_n << "\n";
    return kExitCounterexample;
  }
  std::cout << "reaction law verified for " << opt.map << " on " << res.pairs << " pairs (n="
            << opt.n << ", radices " << opt.radices[0] << "," << opt.radices[1] << ")\n";
  return kExitPass;
}

template <class T, class Prod>
int run_group_lumping(const ClassTable<T>& table, Prod&& prod, const Options& opt) {
  const int workers = resolve_workers(opt.workers);
  std::cerr << "verifying lumping '" << table.statistic << "' on " << table.elements.size()
            << " elements, " << table.classes() << " classes\n";
  const auto out = structure_constants(table, prod, workers);
  if (!out.ok()) {
    const auto& cx = *out.counterexample;
    std::ostringstream w1, w2;
    w1 << cx.witness1;
    w2 << cx.witness2;
    std::cout << "not a lumping: classes (" << table.labels[static_cast<std::size_t>(cx.a_class)]
              << ", " << table.labels[static_cast<std::size_t>(cx.b_class)]
              << ") hit representative " << w1.str() << " " << cx.count1 << " time(s) but "
              << w2.str() << " " << cx.count2 << " time(s)\n";
    return kExitCounterexample;
  }
  emit(render_structure(*out.table, opt.n, parse_format(opt.format)), opt.out_path);
  return kExitPass;
}

int cmd_verify_lumping(const Options& opt) {
  if (opt.stat.empty()) throw std::invalid_argument("--stat is required");
  if (opt.group == "sym")
    return run_group_lumping(classify_sym(opt.n, opt.stat),
                             [](const Permutation& p, const Permutation& q) {
                               return compose(p, q);
                             },
                             opt);
  if (opt.group == "oriented")
    return run_group_lumping(classify_oriented(opt.n, opt.stat),
                             [](const OrientedPermutation& p, const OrientedPermutation& q) {
                               return o_compose(p, q);
                             },
                             opt);
  if (opt.group == "words") {
    if (opt.radices.size() != 2)
      throw std::invalid_argument("--group words wants --radices a,b");
    const int a = opt.radices[0], b = opt.radices[1];
    const auto A = classify_words(enumerate_words(opt.n, a), opt.stat);
    const auto B = classify_words(enumerate_words(opt.n, b), opt.stat);
    const auto C = classify_words(enumerate_words(opt.n, a * b), opt.stat);
    auto twist = [&opt](const RadixWord& u, const RadixWord& v) {
      if (opt.map == "riffle") return riffle_product(u, v);
      if (opt.map == "ruffle") return ruffle_product(u, v);
      throw std::invalid_argument("--group words wants --map riffle or ruffle");
    };
    const int workers = resolve_workers(opt.workers);
    std::cerr << "verifying graded lumping '" << opt.stat << "' for " << opt.map << ", radices ("
              << a << "," << b << ")\n";
    const auto out = structure_constants(A, B, C, twist, workers);
    if (!out.ok()) {
      const auto& cx = *out.counterexample;
      std::ostringstream w1, w2;
      w1 << cx.witness1;
      w2 << cx.witness2;
      std::cout << "not a lumping: representative " << w1.str() << " hit " << cx.count1
                << " time(s) but " << w2.str() << " hit " << cx.count2 << " time(s)\n";
      return kExitCounterexample;
    }
    emit(render_structure(*out.table, opt.n, parse_format(opt.format)), opt.out_path);
    return kExitPass;
  }
  throw std::invalid_argument("unknown group: " + opt.group);
}

template <class TM, class TN, class F>
int run_restructure(const ClassTable<TM>& source, const ClassTable<TN>& target, F&& f,
                    const Options& opt) {
  const int workers = resolve_workers(opt.workers);
  std::cerr << "computing restructure constants " << source.statistic << " -> "
            << target.statistic << " through " << opt.map << "\n";
  const auto out = restructure(source, target, f, workers);
  if (!out.ok()) {
    const auto& cx = *out.counterexample;
    std::ostringstream w1, w2;
    w1 << cx.witness1;
    w2 << cx.witness2;
    std::cout << "restructure constants are not well defined: source class "
              << source.labels[static_cast<std::size_t>(cx.source_class)] << " maps onto "
              << w1.str() << " " << cx.count1 << " time(s) but onto " << w2.str() << " "
              << cx.count2 << " time(s)\n";
    return kExitCounterexample;
  }
  emit(render_restructure(*out.matrix, opt.n, opt.map, parse_format(opt.format)), opt.out_path);
  return kExitPass;
}

int cmd_restructure(const Options& opt) {
  const std::string target_stat =
      !opt.target_stat.empty() ? opt.target_stat
      : opt.map == "riffle"          ? "rising"
      : opt.map == "ruffle"          ? "turning"
      : opt.map == "orientedruffle"  ? "orientedrising"
      : opt.map == "directedruffle"  ? "reducedturning"
      : opt.map == "project"         ? "turning"
                                     : "";
  if (target_stat.empty()) throw std::invalid_argument("unknown map: " + opt.map);

  if (opt.map == "riffle" || opt.map == "ruffle") {
    const auto source = classify_words(words_up_to_radix(opt.n, opt.max_radix), opt.source_stat);
    const auto target = classify_sym(opt.n, target_stat);
    if (opt.map == "riffle")
      return run_restructure(source, target, [](const RadixWord& w) { return riffle(w); }, opt);
    return run_restructure(source, target, [](const RadixWord& w) { return ruffle(w); }, opt);
  }
  if (opt.map == "orientedruffle") {
    const auto source = classify_words(words_up_to_radix(opt.n, opt.max_radix), opt.source_stat);
    const auto target = classify_oriented(opt.n, target_stat);
    return run_restructure(source, target,
                           [](const RadixWord& w) { return oriented_ruffle(w); }, opt);
  }
  if (opt.map == "directedruffle") {
    const auto source =
        classify_directed_words(directed_words_up_to_radix(opt.n, opt.max_radix), opt.source_stat);
    const auto target = classify_sym(opt.n, target_stat);
    return run_restructure(source, target,
                           [](const DirectedWord& w) { return directed_ruffle(w); }, opt);
  }
  if (opt.map == "project") {
    const std::string source_stat = opt.source_stat == "hand" ? "orientedrising" : opt.source_stat;
    const auto source = classify_oriented(opt.n, source_stat);
    const auto target = classify_sym(opt.n, target_stat);
    return run_restructure(source, target,
                           [](const OrientedPermutation& p) { return project(p); }, opt);
  }
  throw std::invalid_argument("unknown map: " + opt.map);
}

void describe_perm(ordered_json& j, const Permutation& p) {
  j["positions"] = p.positions();
  j["deck_word"] = p.deck_word();
  const auto r = rising(p);
  j["rising"] = {{"count", r.count}, {"cuts", r.cuts}};
  const auto t = turning(p);
  j["turning"] = {{"count", t.count}, {"points", t.points}, {"reduced_count", t.reduced_count}};
}

void print_perm_text(std::ostream& os, const Permutation& p) {
  const auto r = rising(p);
  const auto t = turning(p);
  os << "positions: " << format_tuple(p.positions()) << "\n";
  os << "deck word: " << format_tuple(p.deck_word()) << "\n";
  os << "rising: count " << r.count << ", cuts " << set_label(r.cuts) << "\n";
  os << "turning: count " << t.count << ", points " << set_label(t.points) << ", reduced "
     << t.reduced_count << "\n";
}

int cmd_stats(const Options& opt) {
  const int given = (opt.word.empty() ? 0 : 1) + (opt.perm_map.empty() ? 0 : 1) +
                    (opt.perm_deck.empty() ? 0 : 1);
  if (given != 1)
    throw std::invalid_argument("stats wants exactly one of --word, --perm-map, --perm-deck");

  ordered_json j;
  std::ostringstream text;

  if (!opt.word.empty()) {
    const bool directed = opt.word.rfind("up:", 0) == 0 || opt.word.rfind("down:", 0) == 0;
    std::optional<OrientedPermutation> oriented_image;
    Permutation image;
    RadixWord plain;
    if (directed) {
      const DirectedWord d = parse_directed_word(opt.word);
      plain = d.word;
      if (opt.map != "directedruffle" && opt.map != "orienteddirectedruffle")
        throw std::invalid_argument("directed word literals want --map directedruffle");
      oriented_image = oriented_directed_ruffle(d);
      image = project(*oriented_image);
      j["word"] = (std::ostringstream() << d).str();
    } else {
      plain = parse_word(opt.word);
      if (opt.map == "riffle") {
        image = riffle(plain);
      } else if (opt.map == "ruffle") {
        image = ruffle(plain);
      } else if (opt.map == "orientedruffle") {
        oriented_image = oriented_ruffle(plain);
        image = project(*oriented_image);
      } else {
        throw std::invalid_argument("unknown map for a plain word: " + opt.map);
      }
      j["word"] = (std::ostringstream() << plain).str();
    }
    j["map"] = opt.map;
    j["hand"] = hand_class(plain);
    const auto cut = cut_class(plain);
    j["cut"] = cut_label([&] {
      std::vector<int> key{cut.radix};
      key.insert(key.end(), cut.counts.begin(), cut.counts.end());
      return key;
    }());
    describe_perm(j, image);
    text << "word: " << j["word"].get<std::string>() << "\n";
    text << "map: " << opt.map << "\n";
    text << "hand: " << hand_class(plain) << ", cut: " << j["cut"].get<std::string>() << "\n";
    print_perm_text(text, image);
    if (oriented_image) {
      std::vector<int> flipped;
      for (int card = 1; card <= oriented_image->size(); ++card)
        if (oriented_image->flipped(card)) flipped.push_back(card);
      j["flipped_cards"] = flipped;
      j["oriented_rising"] = oriented_rising_count(*oriented_image);
      text << "flipped cards: " << set_label(flipped) << "\n";
      text << "oriented rising: count " << oriented_rising_count(*oriented_image) << "\n";
    }
  } else {
    const Permutation p = !opt.perm_map.empty()
                              ? Permutation::from_positions(parse_int_list(opt.perm_map))
                              : Permutation::from_deck(parse_int_list(opt.perm_deck));
    describe_perm(j, p);
    print_perm_text(text, p);
  }

  const OutputFormat fmt = parse_format(opt.format);
  if (fmt == OutputFormat::json)
    emit(j.dump(2) + "\n", opt.out_path);
  else
    emit(text.str(), opt.out_path);
  return kExitPass;
}

int cmd_factorization(const Options& opt) {
  const FactorizationReport rep = hand_algebra_check(opt.n, opt.max_radix, opt.map);
  if (!rep.ok) {
    std::cout << "factorization is not unique for radices (" << rep.a << "," << rep.b
              << "): " << rep.collision_first << " and " << rep.collision_second << " both give "
              << rep.product << "\n";
    return kExitCounterexample;
  }
  std::cout << "every product of an a-" << opt.map << " and a b-" << opt.map
            << " factors uniquely, a,b <= " << opt.max_radix << ", n=" << opt.n << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for riffle/ruffle shuffle monoids and their lumping algebras"};
  app.require_subcommand(1);
  Options opt;

  auto add_workers = [&](CLI::App* cmd) {
    cmd->add_option("--workers", opt.workers,
                    "worker threads (default: RUFFLES_WORKERS or 1; output is identical for "
                    "every value)");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "output format: text, json or csv");
    cmd->add_option("--out", opt.out_path, "write the result to a file instead of stdout");
  };

  CLI::App* examples = app.add_subcommand(
      "check-examples", "replay the built-in worked examples and verify them bit-exactly");
  examples->add_flag("--sabotage", opt.sabotage,
                     "perturb one expected value (self-test; the run must fail)");

  CLI::App* reaction = app.add_subcommand("verify-reaction", "check the reaction law for a map");
  reaction->add_option("--map", opt.map,
                       "riffle, ruffle, orientedruffle, directedruffle or "
                       "orienteddirectedruffle")
      ->required();
  reaction->add_option("--n", opt.n, "deck size")->required();
  reaction->add_option("--radices", opt.radices, "the two radices, e.g. 2,3")
      ->required()
      ->delimiter(',');
  reaction->add_flag("--corrupt", opt.corrupt,
                     "swap two outputs of the map first (must produce a counterexample)");
  add_workers(reaction);

  CLI::App* lumping = app.add_subcommand(
      "verify-lumping", "check that a statistic has representative-independent structure "
                        "constants, and emit the table");
  lumping->add_option("--group", opt.group, "sym, oriented or words");
  lumping->add_option("--n", opt.n, "deck size")->required();
  lumping->add_option("--stat", opt.stat,
                      "sym: rising, risingsequence, turning, reducedturning, fixedpoints; "
                      "oriented: orientedrising; words: hand, cut")
      ->required();
  lumping->add_option("--map", opt.map, "words only: riffle or ruffle product");
  lumping->add_option("--radices", opt.radices, "words only: the two radices")->delimiter(',');
  add_output(lumping);
  add_workers(lumping);

  CLI::App* restr = app.add_subcommand(
      "restructure", "compute restructure constants for a map and report triangularity and the "
                     "diagonal");
  restr->add_option("--map", opt.map,
                    "riffle, ruffle, orientedruffle, directedruffle or project")
      ->required();
  restr->add_option("--n", opt.n, "deck size")->required();
  restr->add_option("--max-radix", opt.max_radix, "include words of radix 1..A");
  restr->add_option("--source-stat", opt.source_stat, "hand or cut (word sources)");
  restr->add_option("--target-stat", opt.target_stat, "defaults to the map's natural statistic");
  add_output(restr);
  add_workers(restr);

  CLI::App* stats = app.add_subcommand("stats", "statistics of a permutation or of a word's image");
  stats->add_option("--word", opt.word, "word literal a:x1,...,xn (optional up:/down: prefix)");
  stats->add_option("--perm-map", opt.perm_map, "permutation in function form, e.g. 3,5,1,2,4");
  stats->add_option("--perm-deck", opt.perm_deck, "permutation as a deck word, e.g. 3,4,1,5,2");
  stats->add_option("--map", opt.map, "interpretation map for words (default riffle)");
  add_output(stats);

  CLI::App* fact = app.add_subcommand("factorization",
                                      "check unique factorization of shuffle products (the hand "
                                      "subalgebra)");
  fact->add_option("--map", opt.map, "riffle or ruffle")->required();
  fact->add_option("--n", opt.n, "deck size")->required();
  fact->add_option("--max-radix", opt.max_radix, "check all radix pairs up to this bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(examples)) return cmd_check_examples(opt);
    if (app.got_subcommand(reaction)) return cmd_verify_reaction(opt);
    if (app.got_subcommand(lumping)) return cmd_verify_lumping(opt);
    if (app.got_subcommand(restr)) return cmd_restructure(opt);
    if (app.got_subcommand(stats)) return cmd_stats(opt);
    if (app.got_subcommand(fact)) return cmd_factorization(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
