#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tamari/encodings.hpp"
#include "tamari/forest.hpp"
#include "tamari/order.hpp"
#include "tamari/polygon.hpp"
#include "tamari/star_sequence.hpp"
#include "tamari/xword.hpp"

namespace {

using namespace tamari;

// Payload kind when --from is omitted: JSON starts with '{', words
// contain 'x' or ',', everything else is a sequence.
std::string detect_kind(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch == '{') return "forest";
    break;
  }
  for (char ch : text) {
    if (ch == 'x' || ch == ',') return "word";
  }
  return "seq";
}

// TAMARI_ENUM_CAP bounds the number of enumerated elements.
std::optional<long long> env_cap() {
  const char* v = std::getenv("TAMARI_ENUM_CAP");
  if (v == nullptr) return std::nullopt;
  char* end = nullptr;
  long long cap = std::strtoll(v, &end, 10);
  if (end == v || *end != '\0' || cap <= 0)
    throw std::invalid_argument("TAMARI_ENUM_CAP must be a positive integer");
  return cap;
}

// weak_bruhat caps the value count, not the element count; translate the
// element cap to the largest n with n! within it.
std::optional<int> bruhat_cap() {
  auto cap = env_cap();
  if (!cap) return std::nullopt;
  long long fact = 1;
  int n = 0;
  while (fact <= *cap / (n + 1)) fact *= ++n;
  return n;
}

std::string convert_one(const std::string& from_flag, const std::string& to,
                        const std::string& text, int k) {
  std::string from = from_flag.empty() ? detect_kind(text) : from_flag;
  if (from == "word") {
    XWord w = XWord::parse(text);
    if (to == "word") return w.str();
    if (to == "seq") return sequence_from_word(w, k).str();
    if (to == "forest") return forest_json(forest_of_word(w, k));
    if (to == "dot") return forest_dot(forest_of_word(w, k));
    return partition_json(partition_from_sequence(sequence_from_word(w, k)));
  }
  if (from == "seq") {
    StarSequence s = StarSequence::parse(k, text);
    if (to == "word") return inversion_word(s).str();
    if (to == "seq") return s.str();
    if (to == "forest") return forest_json(tau(s));
    if (to == "dot") return forest_dot(tau(s));
    return partition_json(partition_from_sequence(s));
  }
  LinearizedForest f = parse_forest_json(text);
  if (to == "word") return word_of(f).str();
  if (to == "seq") return pi(f).str();
  if (to == "forest") return forest_json(f);
  if (to == "dot") return forest_dot(f);
  return partition_json(tree_to_partition(shape(f)));
}

// Runs fn on the payload, or on every stdin line when the payload is "-".
template <typename Fn>
void for_each_payload(const std::string& payload, Fn&& fn) {
  if (payload != "-") {
    fn(payload);
    return;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    fn(line);
  }
}

// Two-payload variant: stdin lines carry both payloads tab-separated.
template <typename Fn>
void for_each_pair(const std::string& a, const std::string& b, Fn&& fn) {
  if (a != "-") {
    fn(a, b);
    return;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::invalid_argument("stdin pairs must be tab-separated");
    fn(line.substr(0, tab), line.substr(tab + 1));
  }
}

void print_poset_text(const Poset& p, const CongruenceClassification* cls) {
  std::cout << "elements " << p.elements.size() << "\n";
  for (const std::string& e : p.elements) std::cout << e << "\n";
  std::cout << "covers " << p.covers.size() << "\n";
  for (const CoverEdge& e : p.covers) std::cout << e.lower << " " << e.upper << "\n";
  if (cls != nullptr) {
    std::cout << "classes " << cls->class_count() << "\n";
    for (std::size_t i = 0; i < cls->class_of.size(); ++i)
      std::cout << (i ? " " : "") << cls->class_of[i];
    std::cout << "\n";
  }
}

void print_lattice_line(const Poset& p, const LatticeReport& report) {
  if (report.is_lattice) {
    std::cout << "lattice true\n";
    return;
  }
  std::cout << "lattice false " << (report.join_failed ? "join" : "meet")
            << " of " << p.elements[static_cast<std::size_t>(report.witness->first)]
            << " and "
            << p.elements[static_cast<std::size_t>(report.witness->second)] << "\n";
}

std::pair<int, int> parse_diagonal(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("diagonal must be written a,b");
  std::size_t used1 = 0, used2 = 0;
  int a = std::stoi(text.substr(0, comma), &used1);
  std::string rest = text.substr(comma + 1);
  int b = std::stoi(rest, &used2);
  if (used1 != comma || used2 != rest.size())
    throw std::invalid_argument("diagonal must be written a,b");
  return {a, b};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tamari orders, Thompson monoid words, star sequences, "
               "forests, and polygon partitions"};
  app.require_subcommand(1);

  std::string from, to, mode = "top", what, pattern, payload, payload2, diagonal;
  std::string output = "text";
  int k = 2;
  int n = -1;
  bool with_classes = false, check_lattice = false, dot_flag = false;

  auto* conv = app.add_subcommand("convert", "Convert between representations");
  conv->add_option("--from", from, "word|seq|forest (default: by inspection)")
      ->check(CLI::IsMember({"word", "seq", "forest"}));
  conv->add_option("--to", to, "word|seq|forest|partition|dot")
      ->required()
      ->check(CLI::IsMember({"word", "seq", "forest", "partition", "dot"}));
  conv->add_option("-k,--arity", k, "arity (default 2; forests carry their own)");
  conv->add_option("payload", payload, "object text, or - for one per stdin line")
      ->required();

  auto* norm = app.add_subcommand("normalize", "Rewrite a word to normal form");
  norm->add_option("--mode", mode, "top|bottom")
      ->check(CLI::IsMember({"top", "bottom"}));
  norm->add_option("-k,--arity", k, "arity (default 2)");
  norm->add_option("payload", payload, "word, or - for one per stdin line")
      ->required();

  auto* eq = app.add_subcommand("eq", "Monoid equivalence of two objects");
  eq->add_option("--from", from, "word|seq|forest (default word)")
      ->check(CLI::IsMember({"word", "seq", "forest"}));
  eq->add_option("-k,--arity", k, "arity (default 2)");
  eq->add_option("a", payload, "first object, or - for tab-separated stdin pairs")
      ->required();
  eq->add_option("b", payload2, "second object");

  auto* mulcmd = app.add_subcommand("mul", "Monoid product of two objects");
  mulcmd->add_option("--from", from, "word|seq|forest (default word)")
      ->check(CLI::IsMember({"word", "seq", "forest"}));
  mulcmd->add_option("-k,--arity", k, "arity (default 2)");
  mulcmd->add_option("a", payload, "first factor, or - for tab-separated stdin pairs")
      ->required();
  mulcmd->add_option("b", payload2, "second factor");

  auto* cls = app.add_subcommand("class", "Enumerate a congruence class");
  cls->add_option("--from", from, "word|seq|forest (default: by inspection)")
      ->check(CLI::IsMember({"word", "seq", "forest"}));
  cls->add_option("-k,--arity", k, "arity (default 2)");
  cls->add_option("payload", payload, "object text, or - for one per stdin line")
      ->required();

  auto* count = app.add_subcommand("count", "Count shapes or congruence classes");
  count->add_option("--what", what, "shapes|classes")
      ->required()
      ->check(CLI::IsMember({"shapes", "classes"}));
  count->add_option("-n,--carets", n, "caret / value count");
  count->add_option("-k,--arity", k, "arity (default 2)");
  count->add_option("--pattern", pattern, "star pattern, e.g. \"_ _ * _\"");

  auto* order = app.add_subcommand("order", "Build a poset and export it");
  order->add_option("--what", what, "bruhat|tamari|partitions")
      ->required()
      ->check(CLI::IsMember({"bruhat", "tamari", "partitions"}));
  order->add_option("-n,--carets", n, "caret / value count");
  order->add_option("-k,--arity", k, "arity for --what partitions (default 2)");
  order->add_option("--pattern", pattern, "star pattern for bruhat/tamari");
  order->add_option("--output", output, "text|json|dot (default text)")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  order->add_flag("--dot", dot_flag, "shorthand for --output dot");
  order->add_flag("--classes", with_classes, "include the congruence classes");
  order->add_flag("--check-lattice", check_lattice, "report the lattice verdict");

  auto* flip = app.add_subcommand("flip", "Flip a diagonal of a partition");
  flip->add_option("--diagonal", diagonal, "diagonal a,b")->required();
  flip->add_option("payload", payload,
                   "partition JSON, or - for one per stdin line")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (conv->parsed()) {
      for_each_payload(payload, [&](const std::string& text) {
        std::cout << convert_one(from, to, text, k) << "\n";
      });
    } else if (norm->parsed()) {
      for_each_payload(payload, [&](const std::string& text) {
        XWord w = XWord::parse(text);
        XWord nf = mode == "top" ? top_normal_form(w, k) : bottom_normal_form(w, k);
        std::cout << nf.str() << "\n";
      });
    } else if (eq->parsed()) {
      if (payload != "-" && eq->count("b") == 0)
        throw std::invalid_argument("eq needs two objects");
      for_each_pair(payload, payload2, [&](const std::string& a, const std::string& b) {
        std::string kind = from.empty() ? "word" : from;
        bool same = false;
        if (kind == "word") {
          same = equivalent(XWord::parse(a), XWord::parse(b), k);
        } else if (kind == "seq") {
          // same monoid element iff equivalent inversion words
          same = equivalent(inversion_word(StarSequence::parse(k, a)),
                            inversion_word(StarSequence::parse(k, b)), k);
        } else {
          // linearizations of one shape all represent the same element
          same = shape(parse_forest_json(a)) == shape(parse_forest_json(b));
        }
        std::cout << (same ? "true" : "false") << "\n";
      });
    } else if (mulcmd->parsed()) {
      if (payload != "-" && mulcmd->count("b") == 0)
        throw std::invalid_argument("mul needs two factors");
      for_each_pair(payload, payload2, [&](const std::string& a, const std::string& b) {
        std::string kind = from.empty() ? "word" : from;
        if (kind == "word") {
          ThompsonElement prod = mul(ThompsonElement(XWord::parse(a), k),
                                     ThompsonElement(XWord::parse(b), k));
          std::cout << prod.canonical().str() << "\n";
        } else if (kind == "seq") {
          std::cout << interlace(StarSequence::parse(k, a), StarSequence::parse(k, b)).str()
                    << "\n";
        } else {
          std::cout << forest_json(stack(parse_forest_json(a), parse_forest_json(b)))
                    << "\n";
        }
      });
    } else if (cls->parsed()) {
      for_each_payload(payload, [&](const std::string& text) {
        std::string kind = from.empty() ? detect_kind(text) : from;
        std::vector<std::string> lines;
        if (kind == "word") {
          for (const XWord& w : enumerate_class(XWord::parse(text), k))
            lines.push_back(w.str());
        } else if (kind == "seq") {
          StarSequence s = StarSequence::parse(k, text);
          for (const LinearizedForest& f : linearizations(shape(tau(s))))
            lines.push_back(pi(f).str());
          std::sort(lines.begin(), lines.end());
        } else {
          LinearizedForest f = parse_forest_json(text);
          for (const LinearizedForest& g : linearizations(shape(f)))
            lines.push_back(forest_json(g));
          std::sort(lines.begin(), lines.end());
        }
        for (const std::string& line : lines) std::cout << line << "\n";
      });
    } else if (count->parsed()) {
      if (what == "shapes") {
        if (n < 0) throw std::invalid_argument("count needs -n");
        std::cout << count_shapes(k, n) << "\n";
      } else {
        if (k != 2)
          throw std::invalid_argument("class counting works on arity 2");
        if (pattern.empty() && n < 0)
          throw std::invalid_argument("count --what classes needs -n or --pattern");
        BlockPattern bp = pattern.empty()
                              ? BlockPattern(0, n > 0 ? std::vector<int>{n}
                                                      : std::vector<int>{},
                                             {})
                              : BlockPattern::parse(pattern);
        CongruenceClassification c = classify(weak_bruhat(bp, bruhat_cap()));
        std::cout << c.class_count() << "\n";
      }
    } else if (order->parsed()) {
      if (dot_flag) output = "dot";
      Poset p;
      CongruenceClassification cset;
      bool have_classes = false;
      if (what == "partitions") {
        if (n < 0) throw std::invalid_argument("order needs -n");
        p = tamari_order_partitions(k, n, env_cap());
      } else {
        if (k != 2)
          throw std::invalid_argument("bruhat and tamari orders work on arity 2");
        if (pattern.empty() && n < 0)
          throw std::invalid_argument("order needs -n or --pattern");
        BlockPattern bp = pattern.empty()
                              ? BlockPattern(0, n > 0 ? std::vector<int>{n}
                                                      : std::vector<int>{},
                                             {})
                              : BlockPattern::parse(pattern);
        p = weak_bruhat(bp, bruhat_cap());
        if (what == "tamari") {
          p = quotient(p, classify(p));
        } else if (with_classes) {
          cset = classify(p);
          have_classes = true;
        }
      }
      std::optional<LatticeReport> report;
      if (check_lattice) report = is_lattice(p);
      const CongruenceClassification* cp = have_classes ? &cset : nullptr;
      if (output == "dot") {
        std::cout << hasse_dot(p, cp);
        if (report) {
          std::cout << "// ";
          print_lattice_line(p, *report);
        }
      } else if (output == "json") {
        std::string body = poset_json(p, cp);
        if (report) {
          std::string extra = ",\"lattice\":";
          extra += report->is_lattice ? "true" : "false";
          body.insert(body.size() - 1, extra);
        }
        std::cout << body << "\n";
      } else {
        print_poset_text(p, cp);
        if (report) print_lattice_line(p, *report);
      }
    } else if (flip->parsed()) {
      std::pair<int, int> d = parse_diagonal(diagonal);
      for_each_payload(payload, [&](const std::string& text) {
        std::cout << partition_json(flip_up(parse_partition_json(text), d)) << "\n";
      });
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
