#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eucdom/axes.hpp"
#include "eucdom/crossing.hpp"
#include "eucdom/euclid.hpp"
#include "eucdom/family.hpp"
#include "eucdom/profile.hpp"

namespace eucdom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFails = 1;
inline constexpr int kExitUsage = 2;

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return buf.str();
}

inline Profile load_profile(const std::string& path) {
  try {
    return parse_profile(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.detail());
  }
}

inline Embedding load_embedding(const std::string& path) {
  try {
    return parse_embedding(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.detail());
  }
}

/// Writes to `path`, or to `out` when no path was given.
inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw IoError("cannot write '" + path + "'");
}

inline std::string voter_list(const std::vector<VoterId>& voters) {
  std::string s;
  for (VoterId v : voters) s += (s.empty() ? "v" : " v") + std::to_string(v);
  return s;
}

inline const char* status_word(EuclideanStatus s) {
  switch (s) {
    case EuclideanStatus::Euclidean: return "yes";
    case EuclideanStatus::NotEuclidean: return "NO";
    case EuclideanStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

inline int cmd_recognize(const std::string& path, int cap, std::ostream& out) {
  const Profile p = load_profile(path);
  out << "profile: " << p.num_alternatives() << " alternatives, " << p.num_voters() << " voters\n";

  const auto axes = enumerate_axes(p, cap);
  constexpr std::size_t kShown = 5;
  if (axes.axes.empty()) {
    out << "single-peaked: no\n";
  } else {
    out << "single-peaked: yes, " << axes.axes.size() << (axes.truncated ? "+" : "")
        << (axes.axes.size() == 1 && !axes.truncated ? " canonical axis" : " canonical axes")
        << " (mirror images counted once)\n";
    for (std::size_t i = 0; i < axes.axes.size() && i < kShown; ++i) out << "  axis: " << join_ids(axes.axes[i]) << "\n";
    if (axes.axes.size() > kShown) out << "  ...\n";
  }

  if (const auto order = find_sc_order(p))
    out << "single-crossing: yes\n  order: " << join_ids(*order, "v") << "\n";
  else
    out << "single-crossing: NONE\n";

  const auto result = recognize_euclidean(p, cap);
  out << "euclidean: " << status_word(result.status) << "\n";
  switch (result.status) {
    case EuclideanStatus::Euclidean: {
      out << "  axis: " << join_ids(*result.axis) << "\n";
      std::istringstream lines(serialize_embedding(*result.embedding));
      for (std::string line; std::getline(lines, line);) out << "  " << line << "\n";
      break;
    }
    case EuclideanStatus::NotEuclidean:
    case EuclideanStatus::Unknown:
      for (const auto& c : result.certificates) {
        int used = 0;
        for (const auto& y : c.certificate) used += !y.is_zero();
        out << "  axis " << join_ids(c.axis) << ": infeasible, certificate combines " << used << " of "
            << c.system.num_rows() << " constraints\n";
      }
      if (result.status == EuclideanStatus::Unknown)
        out << "  axis cap " << cap << " reached before a feasible axis was found\n";
      break;
  }
  return kExitOk;
}

inline int cmd_witness(const std::string& path, const std::string& property, std::ostream& out) {
  const Profile p = load_profile(path);
  if (property == "sp") {
    const auto w = find_sp_obstruction(p);
    if (!w) {
      out << "NONE\n";
      return kExitOk;
    }
    out << (w->kind == SPWitnessKind::Triple ? "Triple" : "Interval4") << "\n";
    out << "  voters: " << voter_list(w->voters) << "\n  alternatives:";
    for (AlternativeId a : w->alternatives) out << " " << a;
    out << "\n";
    return kExitPropertyFails;
  }
  const auto w = find_sc_obstruction(p);
  if (!w) {
    out << "NONE\n";
    return kExitOk;
  }
  out << (w->kind == SCWitnessKind::Gamma3x6 ? "Gamma3x6" : "Delta4x4") << "\n";
  out << "  voters: " << voter_list(w->voters) << "\n  pairs:";
  for (const auto& [x, y] : w->pairs) out << " (" << x << "," << y << ")";
  out << "\n";
  return kExitPropertyFails;
}

inline int cmd_verify(const std::string& profile_path, const std::string& embedding_path, ConstraintMode mode,
                      std::ostream& out) {
  const Profile p = load_profile(profile_path);
  const Embedding e = load_embedding(embedding_path);
  const auto report = verify_embedding(p, e, mode);
  if (report.ok) {
    out << "OK\n";
    return kExitOk;
  }
  out << "VIOLATIONS " << report.violations.size() << "\n";
  for (const auto& v : report.violations) {
    out << "  v" << v.voter;
    if (v.frame_voter != v.voter) out << " (embedding v" << v.frame_voter << ")";
    out << ": prefers " << v.preferred << " over " << v.other << " but is not strictly closer to it\n";
  }
  return kExitPropertyFails;
}

inline int cmd_minimality(int k, bool lp_for_all, std::ostream& out) {
  const auto report = family::minimality_check(k, lp_for_all);
  out << "k=" << k << ": full profile euclidean: " << status_word(report.full_status)
      << (report.certificates_valid ? ", certificates valid" : ", INVALID certificates") << "\n";
  out << "s\tclosed-form\tlp\trequired\n";
  for (const auto& d : report.deletions) {
    out << d.s << "\t";
    if (d.closed_form_ok)
      out << "ok";
    else if (d.closed_form_collides)
      out << "alternatives collide";
    else
      out << d.closed_form_violations << (d.closed_form_violations == 1 ? " violation" : " violations");
    if (k < 5 && !d.closed_form_ok) out << " (informational)";
    out << "\t";
    if (!d.lp_status)
      out << "-";
    else
      out << status_word(*d.lp_status) << (d.lp_embedding_ok ? "" : " (embedding rejected)");
    out << "\t" << (d.required_ok ? "pass" : "FAIL") << "\n";
  }
  out << (report.pass() ? "minimal non-euclidean: confirmed\n" : "minimal non-euclidean: NOT confirmed\n");
  return report.pass() ? kExitOk : kExitPropertyFails;
}

inline int cmd_table(int k, const std::string& format, std::ostream& out) {
  family::check_k(k);
  std::vector<std::vector<std::string>> cells;
  for (int s = 1; s <= 2 * k; ++s) {
    std::vector<std::string> row{"E_" + std::to_string(s)};
    for (const auto& d : family::distance_row(k, s)) row.push_back(d.str());
    cells.push_back(std::move(row));
  }
  if (format == "tsv") {
    out << "s";
    for (int i = 2; i <= 4 * k; ++i) out << "\td" << i;
    out << "\n";
    for (int s = 1; s <= 2 * k; ++s) {
      out << s;
      for (std::size_t c = 1; c < cells[s - 1].size(); ++c) out << "\t" << cells[s - 1][c];
      out << "\n";
    }
    return kExitOk;
  }
  std::vector<std::string> header{""};
  for (int i = 2; i <= 4 * k; ++i) header.push_back("d" + std::to_string(i));
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  auto print_row = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) line += "  ";
      line += std::string(width[c] - row[c].size(), ' ') + row[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  };
  print_row(header);
  for (const auto& row : cells) print_row(row);
  return kExitOk;
}

}  // namespace detail

/// Parses argv and runs one subcommand. Results go to `out`, diagnostics to
/// `err`. Exit status 0 means success or the property holds, 1 means the
/// checked property fails, 2 means a usage, input or IO error.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact recognition of single-peaked, single-crossing and one-dimensional Euclidean profiles",
               "eucdom"};
  app.require_subcommand(1);

  std::string profile_path, embedding_path, output_path, property, mode = "full", format = "text";
  int cap = kDefaultAxisCap, k = 0, s = 0;
  bool lp_for_all = false;

  auto* recognize = app.add_subcommand("recognize", "single-peaked axes, single-crossing order, Euclidean status");
  recognize->add_option("profile", profile_path, "profile file")->required();
  recognize->add_option("--axis-cap", cap, "maximum number of canonical axes to enumerate")
      ->check(CLI::PositiveNumber);

  auto* witness = app.add_subcommand("witness", "forbidden substructure, or NONE");
  witness->add_option("profile", profile_path, "profile file")->required();
  witness->add_option("--property", property, "sp or sc")->required()->check(CLI::IsMember({"sp", "sc"}));

  auto* generate = app.add_subcommand("generate", "write the 2k-voter non-Euclidean profile");
  generate->add_option("--k", k, "family parameter, at least 2")->required();
  generate->add_option("-o,--output", output_path, "output file (default stdout)");

  auto* embed = app.add_subcommand("embed", "write the closed-form embedding without voter s");
  embed->add_option("--k", k, "family parameter, at least 2")->required();
  embed->add_option("--s", s, "deleted voter, 1..2k")->required();
  embed->add_option("-o,--output", output_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "check an embedding against a profile");
  verify->add_option("profile", profile_path, "profile file")->required();
  verify->add_option("embedding", embedding_path, "embedding file")->required();
  verify->add_option("--mode", mode, "full or reduced")->check(CLI::IsMember({"full", "reduced"}));

  auto* minimality = app.add_subcommand("minimality", "non-Euclidean, but Euclidean after any single deletion");
  minimality->add_option("--k", k, "family parameter, at least 2")->required();
  minimality->add_flag("--lp-all", lp_for_all, "also run LP recognition on every deletion when k >= 5");

  auto* table = app.add_subcommand("table", "consecutive distances of the closed-form embeddings");
  table->add_option("--k", k, "family parameter, at least 2")->required();
  table->add_option("--format", format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (recognize->parsed()) return detail::cmd_recognize(profile_path, cap, out);
    if (witness->parsed()) return detail::cmd_witness(profile_path, property, out);
    if (generate->parsed()) {
      detail::emit(serialize_profile(family::gen_profile(k)), output_path, out);
      return kExitOk;
    }
    if (embed->parsed()) {
      detail::emit(serialize_embedding(family::gen_embedding(k, s)), output_path, out);
      return kExitOk;
    }
    if (verify->parsed())
      return detail::cmd_verify(profile_path, embedding_path,
                                mode == "reduced" ? ConstraintMode::Reduced : ConstraintMode::Full, out);
    if (minimality->parsed()) return detail::cmd_minimality(k, lp_for_all, out);
    if (table->parsed()) return detail::cmd_table(k, format, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace eucdom::cli
