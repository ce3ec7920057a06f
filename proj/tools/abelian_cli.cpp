// Command-line front end for the pointed-group amalgamation engine:
// parse group/element literals and span files, run the deciders, construct
// amalgams, and tabulate bases.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "abelian/abelian.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefused = 1;  // enumeration bound, decider disagreement
constexpr int kExitBadInput = 2;

std::int64_t enumeration_bound() {
  const char* env = std::getenv("ABELIAN_ENUM_BOUND");
  if (env == nullptr || *env == '\0') return abelian::kDefaultEnumerationBound;
  char* end = nullptr;
  long long value = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || value < 1)
    throw std::invalid_argument("ABELIAN_ENUM_BOUND must be a positive integer, got '" +
                                std::string(env) + "'");
  return static_cast<std::int64_t>(value);
}

abelian::DecideMethod parse_method(const std::string& name) {
  if (name == "bruteforce") return abelian::DecideMethod::bruteforce;
  if (name == "structural") return abelian::DecideMethod::structural;
  if (name == "both") return abelian::DecideMethod::both;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::string generators_literal(const abelian::Subgroup& s) {
  std::string out = "<";
  const auto& gens = s.generators();
  if (gens.empty()) out += "0";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += ",";
    out += abelian::to_literal(gens[i]);
  }
  return out + ">";
}

std::string csv_quote(const std::string& field) {
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    out += c;
  }
  return out + "\"";
}

std::string verdict_detail(const abelian::BaseVerdict& v) {
  if (v.is_base) {
    if (v.prime_power)
      return "p=" + std::to_string(v.prime_power->first) +
             ";n=" + std::to_string(v.prime_power->second);
    return "";
  }
  if (v.refuting_pair) {
    const auto& [h, k] = *v.refuting_pair;
    return "H=" + generators_literal(h) + ";K=" + generators_literal(k);
  }
  if (v.structural_failure) return abelian::structural_failure_name(*v.structural_failure);
  return "";
}

void print_verdict_text(const abelian::PointedGroup& pg, const abelian::BaseVerdict& v) {
  std::cout << "(" << abelian::to_literal(pg.group) << ", " << abelian::to_literal(pg.point)
            << ") is " << (v.is_base ? "" : "not ") << "an h-amalgamation basis";
  if (v.is_base && v.prime_power) {
    std::cout << ": o(g) is a power of " << v.prime_power->first << " and the "
              << v.prime_power->first << "-component is cyclic of order "
              << v.prime_power->first << "^" << v.prime_power->second;
  } else if (!v.is_base && v.refuting_pair) {
    const auto& [h, k] = *v.refuting_pair;
    std::cout << ": g lies in H+K but in neither summand, for H = " << generators_literal(h)
              << " (order " << h.order() << "), K = " << generators_literal(k) << " (order "
              << k.order() << ")";
  } else if (!v.is_base && v.structural_failure) {
    std::cout << ": " << abelian::structural_failure_name(*v.structural_failure);
  }
  std::cout << "\n";
}

int run_check_base(const std::string& group_text, const std::string& element_text,
                   const std::string& method_name, const std::string& format) {
  abelian::FinAbGroup group = abelian::parse_group(group_text);
  abelian::GroupElement g = abelian::parse_element(element_text, group);
  if (g.is_zero()) {
    std::cerr << "g must be nonzero (T*_ab requires g != 0)\n";
    return kExitBadInput;
  }
  abelian::PointedGroup pg(group, g);
  abelian::DecideMethod method = parse_method(method_name);
  std::int64_t bound = enumeration_bound();

  abelian::BaseVerdict verdict;
  if (method == abelian::DecideMethod::bruteforce) {
    verdict = abelian::is_base_bruteforce(pg, bound);
  } else if (method == abelian::DecideMethod::structural) {
    verdict = abelian::is_base_structural(pg);
  } else {
    abelian::BaseVerdict bf = abelian::is_base_bruteforce(pg, bound);
    abelian::BaseVerdict st = abelian::is_base_structural(pg);
    if (bf.is_base != st.is_base) throw abelian::DecideDisagreement(pg, bf.is_base, st.is_base);
    verdict = std::move(st);
    verdict.method = abelian::DecideMethod::both;
    verdict.refuting_pair = std::move(bf.refuting_pair);
  }

  if (format == "text")
    print_verdict_text(pg, verdict);
  else
    std::cout << abelian::verdict_to_json(verdict).dump() << "\n";
  return kExitOk;
}

int run_subgroups(const std::string& group_text, const std::string& format) {
  abelian::FinAbGroup group = abelian::parse_group(group_text);
  auto subgroups = abelian::all_subgroups(group, enumeration_bound());
  if (format == "text") {
    std::cout << abelian::to_literal(group) << ": " << subgroups.size() << " subgroups\n";
    for (const auto& s : subgroups) {
      std::cout << "order " << s.order() << ": " << generators_literal(s) << " = {";
      for (std::size_t i = 0; i < s.elements().size(); ++i) {
        if (i) std::cout << ",";
        std::cout << abelian::to_literal(s.elements()[i]);
      }
      std::cout << "}\n";
    }
  } else {
    abelian::Json j;
    j["group"] = abelian::to_literal(group);
    j["count"] = subgroups.size();
    abelian::Json list = abelian::Json::array();
    for (const auto& s : subgroups) list.push_back(abelian::subgroup_to_json(s));
    j["subgroups"] = std::move(list);
    std::cout << j.dump() << "\n";
  }
  return kExitOk;
}

int run_amalgamate(const std::string& span_path, const std::string& format) {
  std::ifstream in(span_path);
  if (!in) throw std::invalid_argument("cannot open span file '" + span_path + "'");
  abelian::Json doc;
  try {
    doc = abelian::Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("span file is not valid JSON: " + std::string(e.what()));
  }
  abelian::Span span = abelian::span_from_json(doc);
  abelian::AmalgamResult result = abelian::pushout(span);
  if (format == "text") {
    if (result.amalgamable) {
      std::cout << "amalgamable: D = " << abelian::to_literal(result.quotient) << ", d = "
                << abelian::to_literal(result.d) << " (order "
                << result.quotient.element_order(result.d) << ")\n";
    } else {
      std::cout << "not amalgamable";
      if (result.witness) {
        std::cout << ": witness " << abelian::to_literal(result.witness->element) << " in ker("
                  << (result.witness->in_left_kernel ? "f" : "h")
                  << ") hits the other leg's point";
      }
      std::cout << "\n";
    }
  } else {
    std::cout << abelian::amalgam_result_to_json(result).dump() << "\n";
  }
  return kExitOk;
}

int run_enumerate(std::int64_t max_order, const std::string& method_name,
                  const std::string& format) {
  auto rows =
      abelian::enumerate_bases(max_order, parse_method(method_name), enumeration_bound());
  if (format == "csv") {
    std::cout << "group,g,is_base,detail\n";
    for (const auto& row : rows) {
      std::cout << csv_quote(abelian::to_literal(row.group)) << ","
                << csv_quote(abelian::to_literal(row.g)) << ","
                << (row.verdict.is_base ? "true" : "false") << ","
                << csv_quote(verdict_detail(row.verdict)) << "\n";
    }
  } else {
    for (const auto& row : rows) std::cout << abelian::row_to_json(row).dump() << "\n";
  }
  return kExitOk;
}

int run_canonical(const std::string& group_text, const std::string& format) {
  abelian::FinAbGroup group = abelian::parse_group(group_text);
  auto factors = abelian::canonical_invariant_factors(group);
  if (format == "text") {
    std::cout << abelian::to_literal(abelian::FinAbGroup(factors)) << "\n";
  } else {
    abelian::Json j;
    j["group"] = abelian::to_literal(group);
    j["invariant_factors"] = factors;
    std::cout << j.dump() << "\n";
  }
  return kExitOk;
}

int run_selftest(std::int64_t max_order) {
  try {
    auto rows = abelian::enumerate_bases(max_order, abelian::DecideMethod::both,
                                         std::max(enumeration_bound(), max_order));
    std::cout << "selftest: " << rows.size() << " (group, g) cells up to order " << max_order
              << ", deciders agree on all\n";
    return kExitOk;
  } catch (const abelian::DecideDisagreement& e) {
    std::cerr << "selftest FAILED: " << e.what() << "\n";
    return kExitRefused;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite pointed abelian groups: amalgamation bases, subgroup lattices, pushouts"};
  app.require_subcommand(1);

  std::string group_text;
  std::string element_text;
  std::string method = "both";
  std::string format = "json";
  std::string span_path;
  std::int64_t max_order = 36;

  auto* check = app.add_subcommand("check-base", "decide whether (G, g) is an h-amalgamation basis");
  check->add_option("group", group_text, "group literal, e.g. \"Z/4 x Z/2\"")->required();
  check->add_option("element", element_text, "element literal, e.g. \"(1,0)\"")->required();
  check->add_option("--method", method, "bruteforce | structural | both")
      ->check(CLI::IsMember({"bruteforce", "structural", "both"}));
  check->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* subs = app.add_subcommand("subgroups", "enumerate the full subgroup lattice");
  subs->add_option("group", group_text, "group literal")->required();
  subs->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* amal = app.add_subcommand("amalgamate", "construct the pushout of a span file");
  amal->add_option("span-file", span_path, "path to a span JSON document")->required();
  amal->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* enumerate = app.add_subcommand("enumerate-bases", "tabulate all bases up to an order");
  enumerate->add_option("--max-order", max_order, "largest group order to include")->required();
  enumerate->add_option("--method", method, "bruteforce | structural | both")
      ->check(CLI::IsMember({"bruteforce", "structural", "both"}));
  enumerate->add_option("--format", format, "jsonl | csv")
      ->check(CLI::IsMember({"jsonl", "csv"}));

  auto* canon = app.add_subcommand("canonical", "invariant-factor form of a group");
  canon->add_option("group", group_text, "group literal")->required();
  canon->add_option("--format", format, "json | text")->check(CLI::IsMember({"json", "text"}));

  auto* self = app.add_subcommand("selftest", "cross-validate the two deciders exhaustively");
  self->add_option("--max-order", max_order, "sweep all groups up to this order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (app.got_subcommand(check))
      return run_check_base(group_text, element_text, method, format);
    if (app.got_subcommand(subs)) return run_subgroups(group_text, format);
    if (app.got_subcommand(amal)) return run_amalgamate(span_path, format);
    if (app.got_subcommand(enumerate))
      return run_enumerate(max_order, method, format == "json" ? "jsonl" : format);
    if (app.got_subcommand(canon)) return run_canonical(group_text, format);
    if (app.got_subcommand(self)) return run_selftest(max_order);
  } catch (const abelian::BoundExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitRefused;
  } catch (const abelian::DecideDisagreement& e) {
    std::cerr << e.what() << "\n";
    return kExitRefused;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::overflow_error& e) {
    std::cerr << e.what() << "\n";
    return kExitRefused;
  }
  return kExitOk;
}
