#include "polyrep/verify.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "polyrep/fixtures.hpp"

namespace polyrep {

using nlohmann::json;

void ReportRecord::check(const std::string& name, const std::string& computed,
                         const std::string& expected) {
  assertions.push_back({name, computed, expected, computed == expected});
}
void ReportRecord::check_eq(const std::string& name, long long computed, long long expected) {
  assertions.push_back(
      {name, std::to_string(computed), std::to_string(expected), computed == expected});
}
void ReportRecord::check_le(const std::string& name, long long computed, long long bound) {
  assertions.push_back(
      {name, std::to_string(computed), "<= " + std::to_string(bound), computed <= bound});
}
void ReportRecord::check_true(const std::string& name, bool ok) {
  assertions.push_back({name, ok ? "true" : "false", "true", ok});
}

json ReportRecord::to_json() const {
  json j;
  j["schema_version"] = 1;
  j["command"] = command;
  j["inputs"] = inputs;
  j["values"] = values;
  json as = json::array();
  for (const auto& a : assertions) {
    json e;
    e["name"] = a.name;
    e["computed"] = a.computed;
    e["expected"] = a.expected;
    e["pass"] = a.pass;
    as.push_back(e);
  }
  j["assertions"] = as;
  j["pass"] = pass();
  return j;
}

// ---- character table cache -------------------------------------------------

namespace {

std::string cache_key(const Fingerprint& fp) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)fp.hash64());
  return "tbl-" + std::to_string(fp.order) + "-" + buf + ".json";
}

json table_to_json(const CharacterTable& t) {
  json j;
  j["schema_version"] = 1;
  j["order"] = t.group->order();
  j["exponent"] = t.exponent;
  j["dixon_prime"] = t.dixon_prime;
  j["class_sizes"] = t.class_sizes;
  json irr = json::array();
  for (const auto& chi : t.irreducibles) {
    json vals = json::array();
    for (const auto& v : chi.values) {
      json coeffs = json::array();
      for (const auto& c : v.coeffs()) coeffs.push_back(json::array({c.num(), c.den()}));
      vals.push_back(coeffs);
    }
    irr.push_back(json{{"degree", chi.degree}, {"values", vals}});
  }
  j["irreducibles"] = irr;
  return j;
}

bool table_from_json(const json& j, const GroupPtr& g, CharacterTable& out) {
  if (!j.contains("schema_version") || j["schema_version"] != 1) return false;
  if (j["order"].get<long long>() != g->order()) return false;
  const auto& cc = g->classes();
  std::vector<long long> sizes;
  for (const auto& m : cc.members) sizes.push_back((long long)m.size());
  if (j["class_sizes"].get<std::vector<long long>>() != sizes) return false;

  out.group = g;
  out.group_fingerprint = fingerprint(*g);
  out.exponent = j["exponent"].get<long long>();
  if (out.exponent != g->exponent()) return false;
  out.dixon_prime = j["dixon_prime"].get<long long>();
  out.class_sizes = sizes;
  out.irreducibles.clear();
  long long e = out.exponent;
  long long phi = euler_phi(e);
  for (const auto& ej : j["irreducibles"]) {
    Character chi;
    chi.degree = ej["degree"].get<long long>();
    for (const auto& vj : ej["values"]) {
      if ((long long)vj.size() != phi) return false;
      Cyclotomic v = Cyclotomic::from_rational(Rational(0), e);
      long long k = 0;
      for (const auto& cj : vj) {
        Rational c(cj[0].get<long long>(), cj[1].get<long long>());
        if (!c.is_zero())
          v = v + Cyclotomic::zeta(e, k % e) * Cyclotomic::from_rational(c, e);
        ++k;
      }
      chi.values.push_back(v);
    }
    out.irreducibles.push_back(std::move(chi));
  }
  return true;
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary);
    out << content;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

CharacterTable character_table_cached(const GroupPtr& g, const std::string& cache_dir,
                                      bool* cache_hit) {
  if (cache_hit) *cache_hit = false;
  if (cache_dir.empty()) return character_table(g);
  Fingerprint fp = fingerprint(*g);
  std::filesystem::path path = std::filesystem::path(cache_dir) / cache_key(fp);
  if (std::filesystem::exists(path)) {
    try {
      std::ifstream in(path, std::ios::binary);
      json j = json::parse(in);
      CharacterTable t;
      if (table_from_json(j, g, t)) {
        verify_character_table(t);  // orthogonality re-checked on every load
        if (cache_hit) *cache_hit = true;
        return t;
      }
      std::cerr << "[cache] stale entry for " << g->label() << ", recomputing\n";
    } catch (const std::exception& e) {
      std::cerr << "[cache] corrupt entry for " << g->label() << " (" << e.what()
                << "), recomputing\n";
    }
  }
  CharacterTable t = character_table(g);
  atomic_write(path, table_to_json(t).dump(2) + "\n");
  return t;
}

RdimAudit rdim_audit(const GroupPtr& g, const VerifyOptions& opt) {
  CharacterTable t = character_table_cached(g, opt.cache_dir);
  auto mins = minimal_normal_subgroups(g);
  RdimAudit out;
  auto rs = rdim_split(t, mins);
  auto rq = rdim_rational_lower(t, mins);
  out.rdim_split = rs.value;
  out.rdim_rational_lower = rq.value;
  out.witness = rs.witness;
  out.classes = (long long)t.class_sizes.size();
  out.exponent = t.exponent;
  return out;
}

// ---- single-command reports -------------------------------------------------

namespace {

const Table1Row* find_table1_row(const std::string& lattice, int rank, int modulus) {
  for (const auto& row : table1_reference()) {
    if (row.lattice != lattice) continue;
    if (lattice == "B" && row.b_rank != rank) continue;
    if (row.modulus != modulus) continue;
    return &row;
  }
  return nullptr;
}

double seconds_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ReportRecord run_symrank(const std::string& lattice, int rank, int modulus) {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "symrank";
  rep.inputs["lattice"] = lattice;
  rep.inputs["rank"] = rank;
  rep.inputs["modulus"] = modulus;

  LatticeAction L = build_lattice(lattice, rank);
  auto sr = symrank(L, modulus);

  rep.values["weyl_order"] = L.weyl_order;
  rep.values["orbit_count"] = sr.orbits.orbit_sizes.size();
  rep.values["orbit_sizes"] = sr.orbits.orbit_sizes;
  rep.values["symrank"] = sr.value;
  json wit = json::array();
  for (const auto& v : sr.witness_reps) wit.push_back(v);
  rep.values["witness_representatives"] = wit;
  rep.values["witness_is_single_orbit"] = sr.witness_orbits.size() == 1;

  long long expected = -1;
  if (lattice == "B") {
    expected = 1;
    for (int i = 0; i < rank; ++i) expected *= 2;  // the 2^n rule
  } else if (const Table1Row* row = find_table1_row(lattice, rank, modulus)) {
    expected = row->omega_size;
  }
  if (expected > 0) rep.check_eq("symrank equals the reference value", sr.value, expected);
  rep.check_true("no union of orbits of size below the optimum generates",
                 sr.smaller_orbits_do_not_generate);

  // The reference Omega (the reduced root/spinor orbit) must itself be a
  // minimum-size generating orbit.  The solver's lexicographic tie-break
  // may surface a different orbit of equal size (G2 mod 4 has two), so the
  // check is that Omega attains the optimum, not that it is the unique
  // witness.
  auto roots = integer_orbit(L, L.omega_seed);
  std::set<std::vector<int>> reduced;
  for (const auto& r : roots) {
    std::vector<int> v(L.rank);
    for (int i = 0; i < L.rank; ++i) v[i] = (int)(((r[i] % modulus) + modulus) % modulus);
    reduced.insert(v);
  }
  int omega_orbit = -1;
  for (size_t oi = 0; oi < sr.orbits.orbit_members.size(); ++oi) {
    std::set<std::vector<int>> members(sr.orbits.orbit_members[oi].begin(),
                                       sr.orbits.orbit_members[oi].end());
    if (members == reduced) omega_orbit = (int)oi;
  }
  rep.check_true("the reduced " + L.omega_description + " form one orbit", omega_orbit >= 0);
  if (omega_orbit >= 0) {
    rep.check_eq("the " + L.omega_description + " orbit has the optimal size",
                 sr.orbits.orbit_sizes[omega_orbit], sr.value);
    rep.check_true("the " + L.omega_description + " orbit generates on its own",
                   generates_mod(sr.orbits.orbit_members[omega_orbit], L.rank, modulus));
    rep.values["omega_is_solver_witness"] =
        sr.witness_orbits == std::vector<int>{omega_orbit};
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ReportRecord run_heisenberg(int p, bool allow_large, const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "heisenberg";
  rep.inputs["p"] = p;

  HeisenbergData data = heisenberg_verify(p, allow_large);
  rep.values["image_order"] = data.image_order;
  rep.check_true("the six matrix relations hold exactly", data.relations_ok);
  rep.check_true("the p^2 matrices P^a D^b are linearly independent", data.span_ok);
  rep.check_true("conjugation recovers rho(F) and rho(V)", data.rho_matches_paper);
  long long sl2_order = (long long)p * ((long long)p * p - 1);
  rep.check_eq("projective image order equals p^2 |SL2(F_p)|", data.image_order,
               (long long)p * p * sl2_order);
  rep.check_eq("projective <P, D> has order p^2", (long long)data.image_n.member_set.size(),
               (long long)p * p);

  auto q = quotient_group(data.image, data.image_n.member_set);
  rep.check_eq("image modulo (C_p)^2 has order |SL2(F_p)|", q.group->order(), sl2_order);
  if (q.group->order() <= 10000)
    rep.check_true("image modulo (C_p)^2 is isomorphic to SL2(F_p)",
                   is_isomorphic(q.group, sl2_mod(p)).isomorphic);

  if (data.image_order <= 10000) {
    RdimAudit audit = rdim_audit(data.image, opt);
    rep.values["rdim_split"] = audit.rdim_split;
    rep.check_eq("rdim_split equals p^2 - 1", audit.rdim_split, (long long)p * p - 1);
  } else {
    rep.values["rdim_split"] = nullptr;
    rep.values["rdim_note"] = "image exceeds the character-table cap of 10^4";
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

namespace {

void audit_records(std::vector<ExtensionRecord>& records, const VerifyOptions& opt) {
  int jobs = std::max(1, opt.jobs);
  if (jobs > 1) {
    // independent records on a small pool; results land in fixed slots
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&records, &next, &opt]() {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= records.size()) return;
          RdimAudit audit = rdim_audit(records[i].group, opt);
          records[i].rdim_split_value = audit.rdim_split;
          records[i].rdim_rational_lower_value = audit.rdim_rational_lower;
        }
      });
    for (auto& t : pool) t.join();
    return;
  }
  for (auto& rec : records) {
    RdimAudit audit = rdim_audit(rec.group, opt);
    rec.rdim_split_value = audit.rdim_split;
    rec.rdim_rational_lower_value = audit.rdim_rational_lower;
  }
}

void append_record_checks(ReportRecord& rep, const ExtensionRecord& rec) {
  std::string tag = rec.name + " [" + ntype_name(rec.n_type) + ", " + ptype_name(rec.p_type) + "]";
  rep.check_eq(tag + ": order", rec.group->order(), rec.expected_order);
  rep.check_true(tag + ": is an extension of the stated type", rec.extension_verified);
  rep.check_le(tag + ": rdim_split <= paper rdim_k", rec.rdim_split_value, rec.paper_rdim_k);
  rep.check_le(tag + ": rdim_split <= paper rdim_Q", rec.rdim_split_value, rec.paper_rdim_q);
  rep.check_le(tag + ": rational lower bound <= paper rdim_Q", rec.rdim_rational_lower_value,
               rec.paper_rdim_q);
}

json record_json(const ExtensionRecord& rec) {
  json j;
  j["name"] = rec.name;
  j["N"] = ntype_name(rec.n_type);
  j["P"] = ptype_name(rec.p_type);
  j["order"] = rec.group->order();
  j["computed_rdim_split"] = rec.rdim_split_value;
  j["computed_rdim_Q_lower"] = rec.rdim_rational_lower_value;
  j["paper_rdim_Q"] = rec.paper_rdim_q;
  j["paper_rdim_k"] = rec.paper_rdim_k;
  return j;
}

bool record_status_ok(const ExtensionRecord& rec) {
  return rec.extension_verified && rec.group->order() == rec.expected_order &&
         rec.rdim_split_value <= rec.paper_rdim_k && rec.rdim_split_value <= rec.paper_rdim_q &&
         rec.rdim_rational_lower_value <= rec.paper_rdim_q;
}

}  // namespace

ReportRecord run_extensions(const std::string& n_filter, const std::string& p_filter,
                            const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "extensions";
  rep.inputs["N"] = n_filter.empty() ? "all" : n_filter;
  rep.inputs["P"] = p_filter.empty() ? "all" : p_filter;

  std::vector<ExtensionRecord> records;
  if (n_filter.empty() != p_filter.empty())
    throw std::invalid_argument("filters --N and --P must be given together");
  if (n_filter.empty()) {
    records = polyhedral_catalog(true);
  } else {
    NType n;
    if (n_filter == "1") n = NType::trivial;
    else if (n_filter == "c2") n = NType::c2;
    else if (n_filter == "c2c2") n = NType::c2c2;
    else throw std::invalid_argument("bad N filter: " + n_filter);
    PType p;
    if (p_filter == "a4") p = PType::a4;
    else if (p_filter == "s4") p = PType::s4;
    else if (p_filter == "a5") p = PType::a5;
    else throw std::invalid_argument("bad P filter: " + p_filter);
    records = polyhedral_catalog(false, n, p);
  }
  audit_records(records, opt);

  json rows = json::array();
  for (auto& rec : records) {
    append_record_checks(rep, rec);
    json j = record_json(rec);
    j["status"] = record_status_ok(rec) ? "PASS" : "FAIL";
    rows.push_back(j);
  }
  rep.values["rows"] = rows;
  rep.values["row_count"] = records.size();
  rep.values["pairwise_non_isomorphic"] = true;  // enforced inside polyhedral_catalog
  rep.values["csv"] = extensions_csv(records);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ReportRecord run_rdim_recipe(const std::string& recipe, const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "rdim";
  rep.inputs["group"] = recipe;
  GroupPtr g = build_recipe_group(recipe);
  rep.values["order"] = g->order();
  RdimAudit audit = rdim_audit(g, opt);
  rep.values["classes"] = audit.classes;
  rep.values["exponent"] = audit.exponent;
  rep.values["rdim_split"] = audit.rdim_split;
  rep.values["rdim_rational_lower"] = audit.rdim_rational_lower;
  json wit = json::array();
  for (const auto& set : audit.witness) wit.push_back(set);
  rep.values["witness_character_indices"] = wit;
  rep.check_true("rdim computed", audit.rdim_split >= 0);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

// ---- acceptance suites -------------------------------------------------------

ReportRecord suite_constants() {
  ReportRecord rep;
  rep.command = "constants";
  const auto& c = c3_constants();
  rep.check_eq("6 x 10368", 6 * c.index_bound, c.upper);
  rep.check_true("lower bound does not exceed the upper bound", c.lower <= c.upper);
  rep.check_eq("c3 lower bound fixture", c.lower, 15);
  return rep;
}

ReportRecord suite_table1() {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "table1";
  for (const auto& row : table1_reference()) {
    if (row.lattice == "B") continue;  // the B_n rule is its own suite
    ReportRecord sub = run_symrank(row.lattice, row.b_rank, row.modulus);
    for (auto& a : sub.assertions) {
      a.name = row.lattice + ": " + a.name;
      rep.assertions.push_back(a);
    }
    // orbit sizes divide |W|
    LatticeAction L = build_lattice(row.lattice, row.b_rank);
    auto dec = orbits_mod(L, row.modulus);
    bool divide = true;
    for (long long s : dec.orbit_sizes)
      if (L.weyl_order % s != 0) divide = false;
    rep.check_true(row.lattice + ": orbit sizes divide |W|", divide);
    rep.values[row.lattice] = sub.values;
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ReportRecord suite_bn(bool with_b8) {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "bn-rule";
  std::vector<int> ranks = {7};
  if (with_b8) ranks.push_back(8);
  for (int n : ranks) {
    std::string tag = "B" + std::to_string(n);
    ReportRecord sub = run_symrank("B", n, 4);
    for (auto& a : sub.assertions) {
      a.name = tag + ": " + a.name;
      rep.assertions.push_back(a);
    }
    rep.values[tag] = sub.values;
    // the spinor classes generate by the mod-2 rank rule
    LatticeAction L = build_lattice("B", n);
    auto spinors = integer_orbit(L, L.omega_seed);
    std::vector<std::vector<int>> reduced;
    for (const auto& r : spinors) {
      std::vector<int> v(L.rank);
      for (int i = 0; i < L.rank; ++i) v[i] = (int)(((r[i] % 4) + 4) % 4);
      reduced.push_back(v);
    }
    rep.check_eq(tag + ": spinor orbit size", (long long)reduced.size(), 1ll << n);
    rep.check_true(tag + ": spinor classes generate", generates_mod(reduced, n, 4));
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ReportRecord suite_heisenberg(const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "heisenberg-suite";
  for (int p : {3, 5}) {
    ReportRecord sub = run_heisenberg(p, false, opt);
    for (auto& a : sub.assertions) {
      a.name = "p=" + std::to_string(p) + ": " + a.name;
      rep.assertions.push_back(a);
    }
    rep.values["p" + std::to_string(p)] = sub.values;
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ReportRecord suite_gl2z4() {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "gl2z4";
  Gl2z4Report g = gl2z4_structure();
  for (const auto& [name, ok] : g.assertions) rep.check_true(name, ok);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ReportRecord suite_table2(const VerifyOptions& opt, std::vector<ExtensionRecord>* out) {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "table2";
  std::vector<ExtensionRecord> records = polyhedral_catalog(true);
  audit_records(records, opt);

  rep.check_eq("row count matches the reference table", (long long)records.size(),
               (long long)table2_reference().size());
  json rows = json::array();
  for (auto& rec : records) {
    append_record_checks(rep, rec);
    json j = record_json(rec);
    j["status"] = record_status_ok(rec) ? "PASS" : "FAIL";
    rows.push_back(j);
  }
  rep.values["rows"] = rows;

  // block cardinalities fixed by the reference table
  auto block_count = [&records](NType n, PType p) {
    long long c = 0;
    for (const auto& r : records)
      if (r.n_type == n && r.p_type == p) ++c;
    return c;
  };
  rep.check_eq("(C2, A4) block has 2 groups", block_count(NType::c2, PType::a4), 2);
  rep.check_eq("(C2, S4) block has 4 groups", block_count(NType::c2, PType::s4), 4);
  rep.check_eq("(C2, A5) block has 2 groups", block_count(NType::c2, PType::a5), 2);
  rep.check_eq("(C2^2, A4) block has 4 groups", block_count(NType::c2c2, PType::a4), 4);
  rep.check_eq("(C2^2, S4) block has 9 groups", block_count(NType::c2c2, PType::s4), 9);
  rep.check_eq("(C2^2, A5) block has 2 groups", block_count(NType::c2c2, PType::a5), 2);

  // exact equalities pinned by the acceptance criteria
  auto find = [&records](const std::string& name) -> const ExtensionRecord& {
    for (const auto& r : records)
      if (r.name == name) return r;
    throw std::logic_error("missing record " + name);
  };
  rep.check_eq("rdim_split(A4) = 3", find("A4").rdim_split_value, 3);
  rep.check_eq("rdim_split(S4) = 3", find("S4").rdim_split_value, 3);
  rep.check_eq("rdim_split(A5) = 3", find("A5").rdim_split_value, 3);
  rep.check_eq("rdim_split(Atilde4) = 2", find("Atilde4").rdim_split_value, 2);
  rep.check_eq("rdim_split(Atilde5) = 2", find("Atilde5").rdim_split_value, 2);

  // stem covers are separated by transposition-preimage orders
  auto plus_orders = transposition_preimage_orders(find("Stilde4+").group);
  auto minus_orders = transposition_preimage_orders(find("Stilde4-").group);
  rep.check_true("transposition preimages in Stilde4+ have order 2",
                 plus_orders == std::vector<int>{2});
  rep.check_true("transposition preimages in Stilde4- have order 4",
                 minus_orders == std::vector<int>{4});

  if (out) *out = std::move(records);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ReportRecord suite_chartab_validity(const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "chartab-validity";
  // character_table (and every cache load) re-verifies both orthogonality
  // relations and the degree sum; walking the suite's groups makes the
  // guarantee an explicit assertion.
  long long verified = 0;
  std::vector<std::pair<std::string, GroupPtr>> groups;
  for (const auto& row : table2_reference())
    groups.emplace_back(row.name, build_catalog_group(row.name));
  groups.emplace_back("S3", symmetric3());
  groups.emplace_back("C2", cyclic_group(2));
  groups.emplace_back("C3", cyclic_group(3));
  groups.emplace_back("C6", cyclic_group(6));
  groups.emplace_back("Q8", quaternion8());
  groups.emplace_back("C2^2", klein_four());
  groups.emplace_back("heis3", heisenberg_verify(3).image);
  groups.emplace_back("heis5", heisenberg_verify(5).image);
  for (const auto& [name, g] : groups) {
    CharacterTable t = character_table_cached(g, opt.cache_dir);
    long long sumsq = 0;
    for (const auto& chi : t.irreducibles) sumsq += chi.degree * chi.degree;
    if (sumsq != g->order()) throw std::logic_error("sum of squares failed for " + name);
    ++verified;
  }
  rep.values["tables_verified"] = verified;
  rep.check_eq("all materialized tables pass both orthogonality relations", verified,
               (long long)groups.size());
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ReportRecord suite_rdim_oracle(const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "rdim-oracle";
  for (const auto& row : table2_reference()) {
    if (row.order > 24) continue;
    GroupPtr g = build_catalog_group(row.name);
    CharacterTable t = character_table_cached(g, opt.cache_dir);
    auto mins = minimal_normal_subgroups(g);
    auto bb = rdim_split(t, mins);
    long long oracle = rdim_split_exhaustive(t);
    rep.check_eq(row.name + ": branch-and-bound equals exhaustive search", bb.value, oracle);
  }
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ReportRecord suite_generation_oracle() {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "generation-oracle";

  // all subsets of size <= 3 of (Z/4)^3
  std::vector<std::vector<int>> all;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) all.push_back({a, b, c});
  long long checked = 0, agreed = 0;
  auto compare = [&](const std::vector<std::vector<int>>& vecs, int n, int d) {
    ++checked;
    if (generates_mod(vecs, n, d) == generates_mod_bruteforce(vecs, n, d)) ++agreed;
  };
  for (size_t i = 0; i < all.size(); ++i) {
    compare({all[i]}, 3, 4);
    for (size_t j = i + 1; j < all.size(); ++j) {
      compare({all[i], all[j]}, 3, 4);
      for (size_t k = j + 1; k < all.size(); ++k) compare({all[i], all[j], all[k]}, 3, 4);
    }
  }
  rep.values["z4_subsets_checked"] = checked;
  rep.check_eq("Nakayama test agrees with additive closure on (Z/4)^3 subsets", agreed, checked);

  std::mt19937_64 rng(20250808);
  long long ragreed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int size = 1 + (int)(rng() % 4);
    std::vector<std::vector<int>> vecs;
    for (int s = 0; s < size; ++s)
      vecs.push_back({(int)(rng() % 6), (int)(rng() % 6), (int)(rng() % 6)});
    if (generates_mod(vecs, 3, 6) == generates_mod_bruteforce(vecs, 3, 6)) ++ragreed;
  }
  rep.check_eq("Nakayama test agrees on 1000 random (Z/6)^3 subsets", ragreed, 1000);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ReportRecord suite_homomorphisms() {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "homomorphisms";

  rep.check_eq("circle point (0, 1) has order 4",
               torus_point_order(TorusForm::circle, Rational(0), Rational(1)), 4);
  rep.check_eq("x^2+3y^2 point (1/2, 1/2) has order 6",
               torus_point_order(TorusForm::x2_plus_3y2, Rational(1, 2), Rational(1, 2)), 6);
  rep.check_eq("identity point has order 1",
               torus_point_order(TorusForm::circle, Rational(1), Rational(0)), 1);

  std::mt19937_64 rng(424242);
  // units r zeta^k keep inverses and determinant powers inside 64-bit
  // rationals across 100 exact products
  auto random_unit = [&rng]() {
    static const Rational r[6] = {Rational(1),     Rational(-1),    Rational(2),
                                  Rational(-2),    Rational(1, 2),  Rational(-1, 2)};
    return Cyclotomic::zeta(12, rng() % 12) *
           Cyclotomic::from_rational(r[rng() % 6], 12);
  };
  auto random_small = [&rng]() {
    Cyclotomic c = Cyclotomic::from_rational(Rational((long long)(rng() % 5) - 2), 12);
    return c + Cyclotomic::zeta(12, rng() % 12) *
                   Cyclotomic::from_rational(Rational((long long)(rng() % 5) - 2), 12);
  };
  auto random_perm3 = [&rng]() {
    std::array<int, 3> p = {0, 1, 2};
    for (int i = 2; i > 0; --i) std::swap(p[i], p[(int)(rng() % (i + 1))]);
    return p;
  };

  bool psi_mult = true;
  for (int trial = 0; trial < 100; ++trial) {
    ExactMatrix a =
        monomial_matrix({random_unit(), random_unit(), random_unit()}, random_perm3());
    ExactMatrix b =
        monomial_matrix({random_unit(), random_unit(), random_unit()}, random_perm3());
    if (monomial_psi(a) * monomial_psi(b) != monomial_psi(a * b)) psi_mult = false;
  }
  rep.check_true("psi is multiplicative on 100 random monomial pairs", psi_mult);
  {
    Cyclotomic l = random_unit();
    ExactMatrix scalar = monomial_matrix({l, l, l}, {0, 1, 2});
    rep.check_true("psi maps diagonal scalars to the identity",
                   monomial_psi(scalar).is_identity());
    Cyclotomic two = Cyclotomic::from_rational(Rational(2), 12);
    Cyclotomic one = Cyclotomic::from_rational(Rational(1), 12);
    ExactMatrix d = monomial_matrix({two, one, one}, {0, 1, 2});
    ExactMatrix expected = ExactMatrix::identity(6, 12);
    std::vector<Rational> diag = {Rational(2), Rational(1),      Rational(2),
                                  Rational(1), Rational(1, 2),   Rational(1, 2)};
    for (int i = 0; i < 6; ++i) expected.at(i, i) = Cyclotomic::from_rational(diag[i], 12);
    rep.check_true("psi(2, 1, 1) is the stated ratio diagonal", monomial_psi(d) == expected);
  }

  // invertible with unit-times-rational determinant: L (unipotent) times U
  auto random_invertible = [&random_unit, &random_small](int n) {
    ExactMatrix lower = ExactMatrix::identity(n, 12);
    ExactMatrix upper(n, n, 12);
    for (int r = 0; r < n; ++r) {
      upper.at(r, r) = random_unit();
      for (int c = 0; c < r; ++c) lower.at(r, c) = random_small();
      for (int c = r + 1; c < n; ++c) upper.at(r, c) = random_small();
    }
    return lower * upper;
  };
  bool phi_mult = true, phi_kernel = true;
  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 2; ++m) {
      for (int trial = 0; trial < 100; ++trial) {
        ExactMatrix a1 = random_invertible(2), a2 = random_invertible(2);
        ExactMatrix b1 = random_invertible(m), b2 = random_invertible(m);
        if (wps_phi(n, m, a1, b1) * wps_phi(n, m, a2, b2) != wps_phi(n, m, a1 * a2, b1 * b2))
          phi_mult = false;
      }
      Cyclotomic t = random_unit();
      ExactMatrix tI2 = ExactMatrix::identity(2, 12).scaled(t);
      Cyclotomic tn = Cyclotomic::from_rational(Rational(1), 12);
      for (int i = 0; i < n; ++i) tn = tn * t;
      ExactMatrix tnIm = ExactMatrix::identity(m, 12).scaled(tn);
      if (!wps_phi(n, m, tI2, tnIm).is_identity()) phi_kernel = false;
    }
  }
  rep.check_true("phi_n multiplicative for n in {1,2,3}, m in {1,2}, 100 random pairs each",
                 phi_mult);
  rep.check_true("phi_n kernel forms (t I2, t^n Im) map to the identity", phi_kernel);
  rep.wall_seconds = seconds_since(start);
  return rep;
}

ReportRecord suite_bound_audit(const std::vector<ExtensionRecord>& records) {
  ReportRecord rep;
  rep.command = "bound-audit";
  for (const auto& rec : records)
    rep.check_le(rec.name + ": rdim_split <= 6", rec.rdim_split_value, 6);
  return rep;
}

ReportRecord run_verify_all(const VerifyOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  ReportRecord rep;
  rep.command = "verify-all";
  rep.inputs["with_b8"] = opt.with_b8;
  rep.inputs["jobs"] = opt.jobs;

  std::vector<ReportRecord> suites;
  suites.push_back(suite_constants());
  suites.push_back(suite_table1());
  suites.push_back(suite_bn(opt.with_b8));
  suites.push_back(suite_heisenberg(opt));
  suites.push_back(suite_gl2z4());
  std::vector<ExtensionRecord> records;
  suites.push_back(suite_table2(opt, &records));
  suites.push_back(suite_bound_audit(records));
  suites.push_back(suite_chartab_validity(opt));
  suites.push_back(suite_rdim_oracle(opt));
  suites.push_back(suite_generation_oracle());
  suites.push_back(suite_homomorphisms());

  json jsuites = json::array();
  long long passed = 0, failed = 0;
  for (const auto& s : suites) {
    jsuites.push_back(s.to_json());
    for (const auto& a : s.assertions) (a.pass ? passed : failed)++;
    rep.assertions.push_back({"suite " + s.command, s.pass() ? "PASS" : "FAIL", "PASS", s.pass()});
  }
  rep.values["suites"] = jsuites;
  rep.values["assertions_passed"] = passed;
  rep.values["assertions_failed"] = failed;
  rep.wall_seconds = seconds_since(start);
  return rep;
}

// ---- CSV emitters ------------------------------------------------------------

std::string extensions_csv(const std::vector<ExtensionRecord>& records) {
  std::ostringstream out;
  out << "name,N,P,order,computed_rdim_split,computed_rdim_Q_lower,paper_rdim_Q,paper_rdim_k,"
         "status\n";
  for (const auto& rec : records)
    out << rec.name << "," << ntype_name(rec.n_type) << "," << ptype_name(rec.p_type) << ","
        << rec.group->order() << "," << rec.rdim_split_value << ","
        << rec.rdim_rational_lower_value << "," << rec.paper_rdim_q << "," << rec.paper_rdim_k
        << "," << (record_status_ok(rec) ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string table1_csv() {
  std::ostringstream out;
  out << "n,lattice,weyl_group,omega,omega_size,d,computed_symrank,status\n";
  for (const auto& row : table1_reference()) {
    LatticeAction L = build_lattice(row.lattice, row.b_rank);
    auto sr = symrank(L, row.modulus);
    out << row.n << "," << L.name << "," << row.weyl << "," << row.omega << ","
        << row.omega_size << "," << row.modulus << "," << sr.value << ","
        << (sr.value == row.omega_size ? "PASS" : "FAIL") << "\n";
  }
  return out.str();
}

std::string table2_csv(const std::vector<ExtensionRecord>& records) {
  return extensions_csv(records);
}

}  // namespace polyrep
