#include "optimin/io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "optimin/error.hpp"

namespace optimin::io {

namespace {

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::parse, (path.empty() ? std::string("/") : path) + ": " + what);
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, e.what());
  }
}

const json& member(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "/" + key, "missing");
  return *it;
}

Rational rational_at(const json& j, const std::string& path) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Rational(mpz_class(std::to_string(j.get<std::uint64_t>())));
    return Rational(mpz_class(std::to_string(j.get<std::int64_t>())));
  }
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      fail(path, "not a rational: " + j.get<std::string>());
    }
  }
  fail(path, "expected an integer or a rational string");
}

ordered rational_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return to_string(r);
}

std::vector<std::string> labels_at(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    if (!j[k].is_string()) fail(path + "/" + std::to_string(k), "expected a string");
    out.push_back(j[k].get<std::string>());
  }
  return out;
}

std::size_t index_of(const std::vector<std::string>& labels, const std::string& label, const std::string& path) {
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return k;
  fail(path, "unknown label " + label);
}

std::string dump(const ordered& j) { return j.dump(2) + "\n"; }

void unique_labels(const std::vector<std::string>& labels, const std::string& path) {
  for (std::size_t a = 0; a < labels.size(); ++a)
    for (std::size_t b = a + 1; b < labels.size(); ++b)
      if (labels[a] == labels[b]) fail(path + "/" + std::to_string(b), "duplicate label " + labels[b]);
}

}  // namespace

NormalFormGame parse_game(const std::string& text) {
  json doc = parse_text(text);
  auto players = labels_at(member(doc, "", "players"), "/players");
  const json& strat_json = member(doc, "", "strategies");
  if (!strat_json.is_array() || strat_json.size() != players.size())
    fail("/strategies", "expected one label list per player");
  std::vector<std::vector<std::string>> strategies;
  for (std::size_t i = 0; i < players.size(); ++i) {
    std::string path = "/strategies/" + std::to_string(i);
    strategies.push_back(labels_at(strat_json[i], path));
    if (strategies.back().empty()) fail(path, "a player needs at least one strategy");
    unique_labels(strategies.back(), path);
  }
  if (players.empty()) fail("/players", "at least one player required");

  std::vector<Rational> payoffs;
  const std::size_t n = players.size();
  auto walk = [&](auto&& self, const json& node, std::size_t depth, const std::string& path) -> void {
    if (!node.is_array()) fail(path, "expected an array");
    if (depth == n) {
      if (node.size() != n) fail(path, "expected " + std::to_string(n) + " payoffs");
      for (std::size_t k = 0; k < n; ++k) payoffs.push_back(rational_at(node[k], path + "/" + std::to_string(k)));
      return;
    }
    if (node.size() != strategies[depth].size())
      fail(path, "expected " + std::to_string(strategies[depth].size()) + " entries for player " + players[depth]);
    for (std::size_t k = 0; k < node.size(); ++k) self(self, node[k], depth + 1, path + "/" + std::to_string(k));
  };
  walk(walk, member(doc, "", "payoffs"), 0, "/payoffs");
  return NormalFormGame(players, strategies, std::move(payoffs));
}

std::string write_game(const NormalFormGame& game) {
  ordered doc;
  doc["players"] = game.players();
  doc["strategies"] = game.strategies();
  const std::size_t n = game.num_players();
  std::size_t cell = 0;
  auto build = [&](auto&& self, std::size_t depth) -> ordered {
    ordered arr = ordered::array();
    if (depth == n) {
      for (std::size_t k = 0; k < n; ++k) arr.push_back(rational_json(game.at(cell, k)));
      ++cell;
      return arr;
    }
    for (std::size_t s = 0; s < game.num_strategies(depth); ++s) arr.push_back(self(self, depth + 1));
    return arr;
  };
  doc["payoffs"] = build(build, 0);
  return dump(doc);
}

coop::TUGame parse_tu(const std::string& text) {
  json doc = parse_text(text);
  const json& nj = member(doc, "", "n");
  if (!nj.is_number_integer() || nj.get<long>() < 1 || nj.get<long>() > static_cast<long>(coop::TUGame::max_players))
    fail("/n", "expected a player count in 1.." + std::to_string(coop::TUGame::max_players));
  const std::size_t n = nj.get<std::size_t>();
  const json& worth = member(doc, "", "worth");
  if (!worth.is_object()) fail("/worth", "expected an object keyed by coalition");
  std::vector<Rational> w(std::size_t{1} << n);
  std::vector<bool> seen(w.size(), false);
  for (auto it = worth.begin(); it != worth.end(); ++it) {
    std::string path = "/worth/" + it.key();
    coop::Coalition s;
    try {
      s = coop::parse_coalition(it.key(), n);
    } catch (const Error& e) {
      fail(path, e.what());
    }
    w[s] = rational_at(it.value(), path);
    seen[s] = true;
  }
  for (coop::Coalition s = 1; s < w.size(); ++s)
    if (!seen[s]) fail("/worth/" + coop::coalition_label(s), "missing coalition worth");
  return coop::TUGame(n, std::move(w));
}

std::string write_tu(const coop::TUGame& game) {
  ordered doc;
  doc["n"] = game.num_players();
  ordered worth = ordered::object();
  // Coalitions by size, then lexicographically, as in "1", "2", "1,2".
  std::vector<coop::Coalition> order;
  for (coop::Coalition s = 1; s <= game.grand(); ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(), [](coop::Coalition a, coop::Coalition b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    for (int bit = 0; bit < 32; ++bit) {
      bool ia = a >> bit & 1, ib = b >> bit & 1;
      if (ia != ib) return ia;
    }
    return false;
  });
  for (auto s : order) worth[coop::coalition_label(s)] = rational_json(game.worth(s));
  doc["worth"] = worth;
  return dump(doc);
}

matching::MarriageProblem parse_marriage(const std::string& text) {
  json doc = parse_text(text);
  auto a = labels_at(member(doc, "", "A"), "/A");
  auto b = labels_at(member(doc, "", "B"), "/B");
  if (a.size() != b.size()) fail("/B", "both sides must have the same size");
  std::vector<std::string> all = a;
  all.insert(all.end(), b.begin(), b.end());
  unique_labels(all, "/A+B");
  const std::size_t n = a.size();
  const json& prefs = member(doc, "", "prefs");
  if (!prefs.is_object()) fail("/prefs", "expected an object keyed by individual");
  for (auto it = prefs.begin(); it != prefs.end(); ++it) index_of(all, it.key(), "/prefs/" + it.key());

  std::vector<std::vector<std::size_t>> rankings;
  for (std::size_t i = 0; i < 2 * n; ++i) {
    std::string path = "/prefs/" + all[i];
    auto list = labels_at(member(prefs, "/prefs", all[i]), path);
    std::vector<std::size_t> ranking;
    std::vector<bool> used(2 * n, false);
    bool self_listed = false;
    for (std::size_t k = 0; k < list.size(); ++k) {
      std::string item_path = path + "/" + std::to_string(k);
      std::size_t j = index_of(all, list[k], item_path);
      bool same_side = (j < n) == (i < n);
      if (same_side && j != i) fail(item_path, list[k] + " is on the same side");
      if (used[j]) fail(item_path, "duplicate entry " + list[k]);
      used[j] = true;
      ranking.push_back(j);
      if (j == i) self_listed = true;
    }
    if (!self_listed) ranking.push_back(i);
    std::size_t other = i < n ? n : 0;
    for (std::size_t j = other; j < other + n; ++j)
      if (!used[j]) ranking.push_back(j);
    rankings.push_back(std::move(ranking));
  }
  return matching::MarriageProblem(a, b, std::move(rankings));
}

std::string write_marriage(const matching::MarriageProblem& problem) {
  ordered doc;
  doc["A"] = problem.side_a();
  doc["B"] = problem.side_b();
  ordered prefs = ordered::object();
  for (std::size_t i = 0; i < problem.population(); ++i) {
    ordered list = ordered::array();
    for (std::size_t j : problem.ranking(i)) list.push_back(problem.label(j));
    prefs[problem.label(i)] = list;
  }
  doc["prefs"] = prefs;
  return dump(doc);
}

namespace {

decisions::OptimismConstraint::Table parse_oc(const json& j, const std::string& path,
                                              const std::vector<std::string>& acts,
                                              const std::vector<std::string>& states,
                                              const std::vector<std::string>& members) {
  decisions::OptimismConstraint::Table table;
  if (!j.is_object()) fail(path, "expected an object keyed by \"*\", \"act,*\" or \"act,state\"");
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::string key_path = path + "/" + it.key();
    std::vector<std::size_t> set;
    auto list = labels_at(it.value(), key_path);
    for (std::size_t k = 0; k < list.size(); ++k)
      set.push_back(index_of(members, list[k], key_path + "/" + std::to_string(k)));
    const std::string& key = it.key();
    if (key == "*") {
      table.wildcard = set;
      continue;
    }
    auto comma = key.find(',');
    if (comma == std::string::npos) fail(key_path, "key must be \"*\", \"act,*\" or \"act,state\"");
    std::size_t act = index_of(acts, key.substr(0, comma), key_path);
    std::string rest = key.substr(comma + 1);
    if (rest == "*")
      table.by_act[act] = set;
    else
      table.by_profile[{act, index_of(states, rest, key_path)}] = set;
  }
  return table;
}

ordered write_oc(const decisions::OptimismConstraint::Table& table, const std::vector<std::string>& acts,
                 const std::vector<std::string>& states, const std::vector<std::string>& members) {
  ordered out = ordered::object();
  auto names = [&](const std::vector<std::size_t>& set) {
    ordered arr = ordered::array();
    for (std::size_t k : set) arr.push_back(members[k]);
    return arr;
  };
  if (table.wildcard) out["*"] = names(*table.wildcard);
  for (const auto& [act, set] : table.by_act) out[acts[act] + ",*"] = names(set);
  for (const auto& [key, set] : table.by_profile) out[acts[key.first] + "," + states[key.second]] = names(set);
  return out;
}

}  // namespace

DecisionFile parse_decision(const std::string& text) {
  json doc = parse_text(text);
  auto acts = labels_at(member(doc, "", "acts"), "/acts");
  auto states = labels_at(member(doc, "", "states"), "/states");
  if (acts.empty()) fail("/acts", "at least one act required");
  if (states.empty()) fail("/states", "at least one state required");
  unique_labels(acts, "/acts");
  unique_labels(states, "/states");
  for (std::size_t k = 0; k < acts.size(); ++k)
    if (acts[k].find(',') != std::string::npos || acts[k] == "*")
      fail("/acts/" + std::to_string(k), "labels may not contain ',' or be \"*\"");
  for (std::size_t k = 0; k < states.size(); ++k)
    if (states[k].find(',') != std::string::npos || states[k] == "*")
      fail("/states/" + std::to_string(k), "labels may not contain ',' or be \"*\"");

  auto adjacency = [&](const char* key, const std::vector<std::string>& from, const std::vector<std::string>& to) {
    std::vector<std::vector<std::size_t>> out(from.size());
    std::string path = std::string("/") + key;
    if (!doc.contains(key)) {
      for (auto& row : out)
        for (std::size_t k = 0; k < to.size(); ++k) row.push_back(k);
      return out;
    }
    const json& j = doc[key];
    if (!j.is_object()) fail(path, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it) index_of(from, it.key(), path + "/" + it.key());
    for (std::size_t f = 0; f < from.size(); ++f) {
      std::string row_path = path + "/" + from[f];
      auto list = labels_at(member(j, path, from[f]), row_path);
      if (list.empty()) fail(row_path, "feasible set must be nonempty");
      for (std::size_t k = 0; k < list.size(); ++k)
        out[f].push_back(index_of(to, list[k], row_path + "/" + std::to_string(k)));
    }
    return out;
  };
  auto feasible_states = adjacency("feasible_states", acts, states);
  auto feasible_acts = adjacency("feasible_acts", states, acts);

  const json& uj = member(doc, "", "utility");
  if (!uj.is_array() || uj.size() != acts.size()) fail("/utility", "expected one row per act");
  std::vector<std::vector<std::optional<Rational>>> utility(acts.size());
  for (std::size_t a = 0; a < acts.size(); ++a) {
    std::string row_path = "/utility/" + std::to_string(a);
    if (!uj[a].is_array() || uj[a].size() != states.size()) fail(row_path, "expected one entry per state");
    for (std::size_t s = 0; s < states.size(); ++s) {
      if (uj[a][s].is_null())
        utility[a].push_back(std::nullopt);
      else
        utility[a].push_back(rational_at(uj[a][s], row_path + "/" + std::to_string(s)));
    }
  }
  bool antagonist = false;
  if (doc.contains("antagonist")) {
    if (!doc["antagonist"].is_boolean()) fail("/antagonist", "expected a boolean");
    antagonist = doc["antagonist"].get<bool>();
  }
  DecisionFile file{decisions::DecisionProblem(acts, states, feasible_states, feasible_acts, utility, antagonist),
                    {}};
  if (doc.contains("oc")) file.oc.states = parse_oc(doc["oc"], "/oc", acts, states, states);
  if (doc.contains("oc_nature")) file.oc.acts = parse_oc(doc["oc_nature"], "/oc_nature", acts, states, acts);
  return file;
}

std::string write_decision(const DecisionFile& file) {
  const auto& p = file.problem;
  ordered doc;
  doc["acts"] = p.acts();
  doc["states"] = p.states();
  ordered fs = ordered::object(), fa = ordered::object();
  for (std::size_t a = 0; a < p.acts().size(); ++a) {
    ordered list = ordered::array();
    for (std::size_t s : p.feasible_states(a)) list.push_back(p.states()[s]);
    fs[p.acts()[a]] = list;
  }
  for (std::size_t s = 0; s < p.states().size(); ++s) {
    ordered list = ordered::array();
    for (std::size_t a : p.feasible_acts(s)) list.push_back(p.acts()[a]);
    fa[p.states()[s]] = list;
  }
  doc["feasible_states"] = fs;
  doc["feasible_acts"] = fa;
  ordered rows = ordered::array();
  for (const auto& row : p.utility_table()) {
    ordered r = ordered::array();
    for (const auto& u : row) r.push_back(u ? rational_json(*u) : ordered(nullptr));
    rows.push_back(r);
  }
  doc["utility"] = rows;
  doc["antagonist"] = p.antagonist();
  doc["oc"] = write_oc(file.oc.states, p.acts(), p.states(), p.states());
  doc["oc_nature"] = write_oc(file.oc.acts, p.acts(), p.states(), p.acts());
  return dump(doc);
}

FileKind detect(const std::string& text) {
  json doc = parse_text(text);
  if (!doc.is_object()) fail("", "expected a JSON object");
  if (doc.contains("players")) return FileKind::game;
  if (doc.contains("worth")) return FileKind::tu;
  if (doc.contains("prefs")) return FileKind::marriage;
  if (doc.contains("acts")) return FileKind::decision;
  fail("", "unrecognized document: expected players, worth, prefs or acts");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace optimin::io
