/* Copyright 2026 The Succession Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "succession/binary.hpp"
#include "succession/errors.hpp"
#include "succession/lab.hpp"
#include "succession/simplex.hpp"

namespace succession::cli {

namespace {

using Inputs = std::vector<std::pair<std::string, std::string>>;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

BigInt parse_count(const std::string& text, const std::string& flag) {
  try {
    BigInt value = parse_bigint(text);
    if (value < 0) throw std::invalid_argument("negative");
    return value;
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + " expects a nonnegative decimal integer, got '" + text + "'");
  }
}

Rational parse_rational(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(flag + " expects a rational like 3, 1/2 or 0.25, got '" + text + "'");
  }
}

std::size_t parse_size(const std::string& text, const std::string& flag) {
  const BigInt value = parse_count(text, flag);
  if (!value.fits_ulong_p()) throw UsageError(flag + " is too large: " + text);
  return value.get_ui();
}

std::vector<Rational> parse_rational_list(const std::string& text, const std::string& flag) {
  std::vector<Rational> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_rational(trim(item), flag));
  return out;
}

// ---------------------------------------------------------------------------
// Output

std::string join_inputs(const Inputs& inputs, const char* sep) {
  std::string out;
  for (const auto& [key, value] : inputs) {
    if (!out.empty()) out += sep;
    out += key + "=" + value;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

nlohmann::ordered_json record_json(const OutputRecord& r, unsigned digits) {
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.inputs) inputs[key] = value;
  return {{"rule", r.rule},
          {"inputs", inputs},
          {"exact", {{"num", r.exact.numerator().get_str()}, {"den", r.exact.denominator().get_str()}}},
          {"decimal", r.exact.to_decimal(digits)}};
}

Format parse_format(const std::string& name) {
  if (name == "plain") return Format::kPlain;
  if (name == "json") return Format::kJson;
  if (name == "csv") return Format::kCsv;
  throw UsageError("unknown --format '" + name + "'");
}

// ---------------------------------------------------------------------------
// Priors from flags

struct PriorFlags {
  std::string rule = "haldane";
  std::string n;
  std::string m = "0";
  std::string alpha = "1";
  std::string beta = "1";
  std::string prior_odds;
  std::string mass_theta1;
  std::string mass_theta0;
  std::string mass_continuous;
};

void add_prior_flags(CLI::App* cmd, PriorFlags& flags, bool with_rule) {
  if (with_rule) {
    cmd->add_option("--rule", flags.rule, "laplace | haldane | jeffreys-split | general")
        ->check(CLI::IsMember({"laplace", "haldane", "jeffreys-split", "general"}));
  }
  cmd->add_option("--alpha", flags.alpha, "first beta shape parameter (p/q)");
  cmd->add_option("--beta", flags.beta, "second beta shape parameter (laplace/general only)");
  cmd->add_option("--prior-odds", flags.prior_odds, "prior odds d = P(UG)/P(not UG)");
  cmd->add_option("--mass-theta1", flags.mass_theta1, "general rule: prior mass on theta = 1");
  cmd->add_option("--mass-theta0", flags.mass_theta0, "general rule: prior mass on theta = 0");
  cmd->add_option("--mass-continuous", flags.mass_continuous,
                  "general rule: mass on the beta component (default: the remainder)");
}

BinaryPrior build_prior(const std::string& rule, const PriorFlags& flags, Inputs& inputs) {
  const Rational alpha = parse_rational(flags.alpha, "--alpha");
  const Rational beta = parse_rational(flags.beta, "--beta");
  if (alpha.sign() <= 0 || beta.sign() <= 0) throw UsageError("--alpha and --beta must be positive");
  const bool general_masses =
      !flags.mass_theta1.empty() || !flags.mass_theta0.empty() || !flags.mass_continuous.empty();
  if (rule != "general" && general_masses) {
    throw UsageError("--mass-* flags require --rule general");
  }
  if ((rule == "haldane" || rule == "jeffreys-split") && beta != 1) {
    throw UsageError("--beta is fixed at 1 for rule " + rule);
  }
  if ((rule == "laplace" || rule == "general") && !flags.prior_odds.empty()) {
    throw UsageError("--prior-odds applies to haldane and jeffreys-split only");
  }

  inputs.emplace_back("alpha", alpha.to_string());
  if (rule == "laplace") {
    inputs.emplace_back("beta", beta.to_string());
    return BinaryPrior::laplace(alpha, beta);
  }
  if (rule == "general") {
    const Rational m1 = flags.mass_theta1.empty() ? 0 : parse_rational(flags.mass_theta1, "--mass-theta1");
    const Rational m0 = flags.mass_theta0.empty() ? 0 : parse_rational(flags.mass_theta0, "--mass-theta0");
    const Rational mc = flags.mass_continuous.empty()
                            ? 1 - m1 - m0
                            : parse_rational(flags.mass_continuous, "--mass-continuous");
    inputs.emplace_back("beta", beta.to_string());
    inputs.emplace_back("mass_theta1", m1.to_string());
    inputs.emplace_back("mass_theta0", m0.to_string());
    inputs.emplace_back("mass_continuous", mc.to_string());
    try {
      return BinaryPrior(m1, m0, mc, alpha, beta);
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("invalid prior: ") + e.what());
    }
  }

  Rational odds = 1;
  if (!flags.prior_odds.empty()) {
    odds = parse_rational(flags.prior_odds, "--prior-odds");
    if (odds.sign() <= 0) throw UsageError("--prior-odds must be positive");
    inputs.emplace_back("prior_odds", odds.to_string());
  }
  const Rational ug = odds / (odds + 1);
  if (rule == "haldane") return BinaryPrior(ug, 0, 1 - ug, alpha, 1);
  // jeffreys-split: the UG mass is shared equally by theta = 1 and theta = 0.
  return BinaryPrior(ug / 2, ug / 2, 1 - ug, alpha, 1);
}

Evidence build_evidence(const PriorFlags& flags, Inputs& inputs) {
  const BigInt n = parse_count(flags.n, "--n");
  const BigInt m = parse_count(flags.m, "--m");
  inputs.emplace_back("n", n.get_str());
  inputs.emplace_back("m", m.get_str());
  return Evidence(n, m);
}

// ---------------------------------------------------------------------------
// lab helpers

struct LabFlags {
  std::string rule = "dirichlet";
  std::string t;
  std::string length = "3";
  std::string k;
  std::string lambda = "1";
  std::string stay = "2/3";
  std::string max_n = "5";
  std::string urn;
  std::string colors;
  std::string draws;
};

std::size_t require_types(const LabFlags& f) {
  if (f.t.empty()) throw UsageError("--t is required for rule " + f.rule);
  const std::size_t t = parse_size(f.t, "--t");
  if (t < 2) throw UsageError("--t must be at least 2");
  return t;
}

// Rule and number of types for the lab subcommands.
std::pair<lab::PredictiveRule, std::size_t> build_rule(const LabFlags& f, Inputs& inputs) {
  inputs.emplace_back("rule", f.rule);
  if (f.rule == "laplace") return {lab::rules::dirichlet({1, 1}), 2};
  if (f.rule == "haldane") return {lab::rules::binary(BinaryPrior::haldane()), 2};
  if (f.rule == "jeffreys-split") return {lab::rules::binary(BinaryPrior::jeffreys_split()), 2};
  if (f.rule == "dirichlet") {
    if (f.k.empty()) throw UsageError("--k is required for rule dirichlet");
    std::vector<Rational> k = parse_rational_list(f.k, "--k");
    if (k.size() < 2) throw UsageError("--k needs at least two parameters");
    for (const Rational& x : k) {
      if (x.sign() <= 0) throw UsageError("--k parameters must be positive");
    }
    inputs.emplace_back("k", f.k);
    const std::size_t t = k.size();
    return {lab::rules::dirichlet(std::move(k)), t};
  }
  const std::size_t t = require_types(f);
  inputs.emplace_back("t", std::to_string(t));
  if (f.rule == "carnap") {
    const Rational lambda = parse_rational(f.lambda, "--lambda");
    if (lambda.sign() <= 0) throw UsageError("--lambda must be positive");
    inputs.emplace_back("lambda", lambda.to_string());
    return {lab::rules::carnap(t, lambda), t};
  }
  if (f.rule == "hintikka") return {lab::rules::mixture(SimplexMixturePrior::hintikka_default(t)), t};
  if (f.rule == "iid") {
    return {lab::rules::iid(std::vector<Rational>(t, Rational(1) / Rational(BigInt(static_cast<unsigned long>(t))))), t};
  }
  throw UsageError("unknown lab rule '" + f.rule + "'");
}

std::vector<unsigned long> parse_colors(const std::string& text, const std::string& flag) {
  std::vector<unsigned long> out;
  for (const std::string& item : split(text, ',')) out.push_back(parse_size(trim(item), flag));
  return out;
}

// "011" for small alphabets, "0 11 3" once a symbol can take two digits.
std::string sequence_string(const std::vector<std::size_t>& seq, std::size_t types) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i > 0 && types > 10) out += ' ';
    out += std::to_string(seq[i]);
  }
  return out;
}

// Lab report: named exact quantities plus an overall verdict.
struct Report {
  std::string check;
  Inputs inputs;
  std::vector<std::pair<std::string, std::string>> facts;
  std::optional<bool> passed;
};

void print_report(const Report& r, Format format, std::ostream& out) {
  if (format == Format::kJson) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    nlohmann::ordered_json facts = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    j["results"] = facts;
    if (r.passed) j["verdict"] = *r.passed ? "PASS" : "FAIL";
    out << j.dump(2) << "\n";
    return;
  }
  out << "check: " << r.check << "\n";
  out << "inputs: " << join_inputs(r.inputs, " ") << "\n";
  for (const auto& [k, v] : r.facts) out << k << ": " << v << "\n";
  if (r.passed) out << (*r.passed ? "PASS" : "FAIL") << "\n";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Appends config-file entries for every key not already given on the command line.
std::vector<std::string> apply_config(std::vector<std::string> args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    }
  }
  if (path.empty()) return args;
  const auto given = [&args](const std::string& flag) {
    return std::any_of(args.begin(), args.end(), [&flag](const std::string& a) {
      return a == flag || a.rfind(flag + "=", 0) == 0;
    });
  };
  std::vector<std::string> extra;
  for (const auto& [key, value] : read_config(path)) {
    const std::string flag = "--" + key;
    if (key == "config" || given(flag)) continue;
    extra.push_back(flag);
    extra.push_back(value);
  }
  args.insert(args.end(), extra.begin(), extra.end());
  return args;
}

}  // namespace

std::string render(const std::vector<OutputRecord>& records, Format format, unsigned digits,
                   bool single_object) {
  std::ostringstream out;
  switch (format) {
    case Format::kPlain:
      for (std::size_t i = 0; i < records.size(); ++i) {
        const OutputRecord& r = records[i];
        if (i > 0) out << "\n";
        out << "rule: " << r.rule << "\n"
            << "inputs: " << join_inputs(r.inputs, " ") << "\n"
            << "exact: " << r.exact.to_string() << "\n"
            << "decimal: " << r.exact.to_decimal(digits) << "\n";
      }
      break;
    case Format::kJson: {
      if (single_object && records.size() == 1) {
        out << record_json(records.front(), digits).dump(2) << "\n";
      } else {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const OutputRecord& r : records) arr.push_back(record_json(r, digits));
        out << arr.dump(2) << "\n";
      }
      break;
    }
    case Format::kCsv:
      out << "rule,inputs,num,den,decimal\n";
      for (const OutputRecord& r : records) {
        out << csv_field(r.rule) << "," << csv_field(join_inputs(r.inputs, ";")) << ","
            << r.exact.numerator().get_str() << "," << r.exact.denominator().get_str() << ","
            << r.exact.to_decimal(digits) << "\n";
      }
      break;
  }
  return out.str();
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    std::string key = trim(line.substr(0, eq));
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    if (key.empty()) throw UsageError(path + ":" + std::to_string(lineno) + ": empty key");
    out.emplace_back(key, trim(line.substr(eq + 1)));
  }
  return out;
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact rules of succession, simplex-mixture predictives and exchangeability checks"};
  app.name("succession");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "plain";
  unsigned digits = kDefaultDigits;
  std::string config_path;
  app.add_option("--format", format_name, "plain | json | csv")
      ->check(CLI::IsMember({"plain", "json", "csv"}));
  app.add_option("--digits", digits, "decimal digits to print")->check(CLI::Range(0u, kMaxDigits));
  app.add_option("--config", config_path, "flat key=value file of default flags");

  // predict
  PriorFlags predict_flags;
  std::string block;
  CLI::App* predict = app.add_subcommand("predict", "probability the next instance(s) confirm");
  predict->add_option("--n", predict_flags.n, "confirming instances (decimal)")->required();
  predict->add_option("--m", predict_flags.m, "disconfirming instances (decimal)");
  predict->add_option("--block", block, "probability that all of the next z' instances confirm");
  add_prior_flags(predict, predict_flags, true);

  // posterior
  PriorFlags posterior_flags;
  CLI::App* posterior = app.add_subcommand("posterior", "posterior P(UG) and Bayes factor");
  posterior->add_option("--n", posterior_flags.n, "confirming instances (decimal)")->required();
  posterior->add_option("--m", posterior_flags.m, "disconfirming instances (decimal)");
  add_prior_flags(posterior, posterior_flags, true);

  // compare
  PriorFlags compare_flags;
  std::string n_list;
  std::string rule_list = "laplace,haldane,jeffreys-split";
  std::string compare_block;
  CLI::App* compare = app.add_subcommand("compare", "tabulate rules over several n");
  compare->add_option("--n-list", n_list, "comma-separated instance counts")->required();
  compare->add_option("--rules", rule_list, "comma-separated subset of laplace,haldane,jeffreys-split");
  compare->add_option("--alpha", compare_flags.alpha, "first beta shape parameter");
  compare->add_option("--block", compare_block, "tabulate block probabilities for z' instances");

  // lab
  CLI::App* lab_cmd = app.add_subcommand("lab", "exchangeability laboratory");
  lab_cmd->require_subcommand(1);
  LabFlags lab_flags;
  CLI::App* exch = lab_cmd->add_subcommand("exchangeable", "build a law and test Johnson's properties");
  exch->add_option("--rule", lab_flags.rule,
                   "laplace | haldane | jeffreys-split | dirichlet | carnap | hintikka | iid | markov");
  exch->add_option("--t", lab_flags.t, "number of types");
  exch->add_option("--length", lab_flags.length, "sequence length");
  exch->add_option("--k", lab_flags.k, "Dirichlet parameters, comma-separated");
  exch->add_option("--lambda", lab_flags.lambda, "Carnap lambda");
  exch->add_option("--stay", lab_flags.stay, "markov: probability of repeating the last type");
  CLI::App* suff = lab_cmd->add_subcommand("sufficientness", "exhaustive sufficientness check");
  suff->add_option("--rule", lab_flags.rule,
                   "laplace | haldane | jeffreys-split | dirichlet | carnap | hintikka | iid");
  suff->add_option("--t", lab_flags.t, "number of types");
  suff->add_option("--k", lab_flags.k, "Dirichlet parameters, comma-separated");
  suff->add_option("--lambda", lab_flags.lambda, "Carnap lambda");
  suff->add_option("--max-n", lab_flags.max_n, "largest total count examined");
  CLI::App* df = lab_cmd->add_subcommand("df-check", "finite de Finetti bound for an urn");
  df->add_option("--urn", lab_flags.urn, "balls per colour, comma-separated")->required();
  df->add_option("--k", lab_flags.draws, "prefix length k")->required();
  CLI::App* urn_cmd = lab_cmd->add_subcommand("urn", "sequence law of draws without replacement");
  urn_cmd->add_option("--colors", lab_flags.colors, "balls per colour, comma-separated")->required();
  urn_cmd->add_option("--k", lab_flags.draws, "number of draws")->required();

  try {
    args = apply_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const Format format = parse_format(format_name);

    if (predict->parsed()) {
      OutputRecord record;
      record.rule = predict_flags.rule;
      const Evidence ev = build_evidence(predict_flags, record.inputs);
      const BinaryPrior prior = build_prior(predict_flags.rule, predict_flags, record.inputs);
      if (block.empty()) {
        record.exact = predict_next(prior, ev);
      } else {
        const BigInt z = parse_count(block, "--block");
        if (z < 1) throw UsageError("--block must be at least 1");
        record.inputs.emplace_back("block", z.get_str());
        record.exact = predict_block(prior, ev, PredictionQuery(z));
      }
      out << render({record}, format, digits, true);
      return kOk;
    }

    if (posterior->parsed()) {
      Inputs inputs;
      const Evidence ev = build_evidence(posterior_flags, inputs);
      const BinaryPrior prior = build_prior(posterior_flags.rule, posterior_flags, inputs);
      inputs.insert(inputs.begin(), {"prior", posterior_flags.rule});
      const Rational bf = bayes_factor_ug(ev, prior.alpha(), prior.beta());
      std::vector<OutputRecord> records{{"posterior_ug", inputs, posterior_ug(prior, ev)},
                                        {"bayes_factor", inputs, bf}};
      out << render(records, format, digits, false);
      return kOk;
    }

    if (compare->parsed()) {
      std::vector<OutputRecord> rows;
      const std::vector<std::string> rules = split(rule_list, ',');
      for (const std::string& raw_rule : rules) {
        const std::string rule = trim(raw_rule);
        if (rule != "laplace" && rule != "haldane" && rule != "jeffreys-split") {
          throw UsageError("--rules accepts laplace, haldane, jeffreys-split; got '" + rule + "'");
        }
      }
      for (const std::string& raw_rule : rules) {
        const std::string rule = trim(raw_rule);
        for (const std::string& raw_n : split(n_list, ',')) {
          OutputRecord row;
          row.rule = rule;
          PriorFlags flags = compare_flags;
          flags.n = trim(raw_n);
          const Evidence ev = build_evidence(flags, row.inputs);
          const BinaryPrior prior = build_prior(rule, flags, row.inputs);
          if (compare_block.empty()) {
            row.exact = predict_next(prior, ev);
          } else {
            const BigInt z = parse_count(compare_block, "--block");
            if (z < 1) throw UsageError("--block must be at least 1");
            row.inputs.emplace_back("block", z.get_str());
            row.exact = predict_block(prior, ev, PredictionQuery(z));
          }
          rows.push_back(std::move(row));
        }
      }
      out << render(rows, format, digits, false);
      return kOk;
    }

    if (format == Format::kCsv) throw UsageError("lab reports support --format plain or json");
    Report report;
    if (exch->parsed()) {
      report.check = "exchangeable";
      const std::size_t length = parse_size(lab_flags.length, "--length");
      if (length < 1) throw UsageError("--length must be at least 1");
      lab::SequenceLaw law = [&] {
        if (lab_flags.rule == "markov") {
          report.inputs.emplace_back("rule", "markov");
          const std::size_t t = require_types(lab_flags);
          const Rational stay = parse_rational(lab_flags.stay, "--stay");
          report.inputs.emplace_back("t", std::to_string(t));
          report.inputs.emplace_back("stay", stay.to_string());
          return lab::markov_law(t, length, stay);
        }
        auto [rule, t] = build_rule(lab_flags, report.inputs);
        return lab::law_from_predictive(rule, t, length);
      }();
      report.inputs.emplace_back("length", std::to_string(length));
      const bool exchangeable = lab::is_exchangeable(law);
      report.facts.emplace_back("sequences", std::to_string(law.size()));
      report.facts.emplace_back("exchangeable", yes_no(exchangeable));
      report.facts.emplace_back("positive_cylinders", yes_no(lab::has_positive_cylinders(law)));
      report.passed = exchangeable;
    } else if (suff->parsed()) {
      report.check = "sufficientness";
      auto [rule, t] = build_rule(lab_flags, report.inputs);
      const std::size_t max_n = parse_size(lab_flags.max_n, "--max-n");
      report.inputs.emplace_back("max_n", std::to_string(max_n));
      const auto witness = lab::find_sufficientness_violation(rule, t, max_n);
      report.passed = !witness.has_value();
      if (witness) {
        const auto counts_str = [](const MultinomialCounts& c) {
          std::string s;
          for (const BigInt& x : c.counts()) s += (s.empty() ? "" : ",") + x.get_str();
          return s;
        };
        report.facts.emplace_back("witness_type", std::to_string(witness->type));
        report.facts.emplace_back("witness_counts_a", counts_str(witness->first));
        report.facts.emplace_back("witness_prediction_a", witness->first_prediction.to_string());
        report.facts.emplace_back("witness_counts_b", counts_str(witness->second));
        report.facts.emplace_back("witness_prediction_b", witness->second_prediction.to_string());
      }
    } else if (df->parsed()) {
      report.check = "df-check";
      const lab::UrnComposition urn(parse_colors(lab_flags.urn, "--urn"));
      const std::size_t k = parse_size(lab_flags.draws, "--k");
      if (k < 1) throw UsageError("--k must be at least 1");
      if (k > urn.total()) throw SampleTooLarge("--k exceeds the number of balls");
      report.inputs.emplace_back("urn", lab_flags.urn);
      report.inputs.emplace_back("k", std::to_string(k));
      const lab::SequenceLaw full = lab::urn_law(urn, urn.total());
      const Rational distance =
          lab::variation_distance(lab::urn_law(urn, k), lab::canonical_mixture(full, k));
      const Rational bound = lab::df_bound(urn.types(), k, urn.total());
      report.facts.emplace_back("distance", distance.to_string());
      report.facts.emplace_back("distance_decimal", distance.to_decimal(digits));
      report.facts.emplace_back("bound", bound.to_string());
      report.passed = distance <= bound;
    } else {
      report.check = "urn";
      const lab::UrnComposition urn(parse_colors(lab_flags.colors, "--colors"));
      const std::size_t k = parse_size(lab_flags.draws, "--k");
      report.inputs.emplace_back("colors", lab_flags.colors);
      report.inputs.emplace_back("k", std::to_string(k));
      const lab::SequenceLaw law = lab::urn_law(urn, k);
      for (std::size_t i = 0; i < law.size(); ++i) {
        report.facts.emplace_back("P(" + sequence_string(law.sequence_at(i), law.types()) + ")", law[i].to_string());
      }
      report.facts.emplace_back("exchangeable", yes_no(lab::is_exchangeable(law)));
      if (urn.types() == 2) {
        report.facts.emplace_back("extendable",
                                  yes_no(lab::binary_exchangeable_extension(law).has_value()));
      }
    }
    print_report(report, format, out);
    return report.passed.value_or(true) ? kOk : kCheckFailed;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitExceeded& e) {
    err << "error: " << e.condition() << ": " << e.what() << "\n";
    return kResourceLimit;
  } catch (const ZeroEvidenceProbability& e) {
    err << "error: " << e.condition() << ": " << e.what() << "\n";
    return kModelContradiction;
  } catch (const UGFalsified& e) {
    err << "error: " << e.condition() << ": " << e.what() << "\n";
    return kModelContradiction;
  } catch (const NoContinuousComponent& e) {
    err << "error: " << e.condition() << ": " << e.what() << "\n";
    return kModelContradiction;
  } catch (const Error& e) {
    err << "error: " << e.condition() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace succession::cli
