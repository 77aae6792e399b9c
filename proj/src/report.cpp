#include "sympspin/report.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <thread>

namespace sympspin {

Format parse_format(const std::string& s) {
    if (s == "json") {
        return Format::Json;
    }
    if (s == "csv") {
        return Format::Csv;
    }
    if (s == "text") {
        return Format::Text;
    }
    throw Error("unknown format '" + s + "'");
}

std::string format_extension(Format f) {
    switch (f) {
        case Format::Json:
            return "json";
        case Format::Csv:
            return "csv";
        case Format::Text:
            return "txt";
    }
    return "out";
}

const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> names{"sl2",    "intertwine", "clifford", "prolong", "constant",
                                                "tower",  "series",     "triangle", "theorem", "example"};
    return names;
}

std::vector<std::string> parse_suites(const std::string& text) {
    if (text == "all") {
        return all_suites();
    }
    std::set<std::string> wanted;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
                   item.end());
        if (item.empty()) {
            continue;
        }
        if (std::find(all_suites().begin(), all_suites().end(), item) == all_suites().end()) {
            throw Error("unknown suite '" + item + "'");
        }
        wanted.insert(item);
    }
    if (wanted.empty()) {
        throw Error("no suites selected");
    }
    std::vector<std::string> out;
    for (const auto& name : all_suites()) {
        if (wanted.count(name)) {
            out.push_back(name);
        }
    }
    return out;
}

void JobConfig::validate() const {
    if (n < 1 || n > kMaxRank) {
        throw Error("n must lie in 1.." + std::to_string(kMaxRank));
    }
    if (hMax < 0) {
        throw Error("hmax must be >= 0");
    }
    if (Q < 0) {
        throw Error("Q must be >= 0");
    }
    for (const auto& s : suites) {
        if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end()) {
            throw Error("unknown suite '" + s + "'");
        }
    }
}

unsigned default_threads() {
    if (const char* env = std::getenv("SYMPSPIN_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) {
            return static_cast<unsigned>(v);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<VerificationReport> run_suites(const JobConfig& cfg) {
    cfg.validate();
    using Job = std::function<VerificationReport()>;
    std::vector<Job> jobs;
    for (const auto& suite : cfg.suites) {
        if (suite == "example") {
            jobs.emplace_back([] { return verify_example(); });
            continue;
        }
        for (int h = 0; h <= cfg.hMax; ++h) {
            SectorSpec s{cfg.n, h, cfg.Q, cfg.parity};
            if (suite == "sl2") {
                jobs.emplace_back([s] { return verify_sl2(s); });
            } else if (suite == "intertwine") {
                jobs.emplace_back([s] { return verify_intertwining(s); });
            } else if (suite == "clifford") {
                jobs.emplace_back([s] { return verify_clifford(s); });
            } else if (suite == "prolong") {
                jobs.emplace_back([s] { return verify_prolongation(s); });
            } else if (suite == "constant") {
                jobs.emplace_back([s] { return verify_constant_lemma(s); });
            } else if (suite == "tower") {
                jobs.emplace_back([s] { return verify_tower_lemma(s); });
            } else if (suite == "series") {
                jobs.emplace_back([s] { return verify_composition_series(s); });
            } else if (suite == "triangle") {
                jobs.emplace_back([s] { return verify_triangle(s); });
            } else if (suite == "theorem") {
                jobs.emplace_back([s] { return verify_theorem_at(s); });
            }
        }
    }

    std::vector<VerificationReport> out(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < jobs.size(); k = next++) {
            try {
                out[k] = jobs[k]();
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    unsigned count = cfg.threads ? cfg.threads : default_threads();
    count = static_cast<unsigned>(std::min<std::size_t>(count, jobs.size()));
    if (count <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < count; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    std::stable_sort(out.begin(), out.end(), report_less);
    return out;
}

Json sector_to_json(const SectorSpec& s) {
    Json j;
    j["n"] = s.n;
    j["h"] = s.h;
    j["Q"] = s.Q;
    j["parity"] = parity_name(s.parity);
    return j;
}

Json report_to_json(const VerificationReport& r) {
    Json j;
    j["claim"] = r.claim;
    j["params"] = sector_to_json(r.params);
    j["expectedDim"] = r.expectedDim;
    j["observedDim"] = r.observedDim;
    j["equalAsSubspaces"] = r.equalAsSubspaces ? Json(*r.equalAsSubspaces) : Json(nullptr);
    j["witnesses"] = r.witnesses;
    j["pass"] = r.pass;
    Json details = Json::object();
    for (const auto& [k, v] : r.details) {
        details[k] = v;
    }
    j["details"] = details;
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    return j;
}

VerificationReport report_from_json(const Json& j) {
    VerificationReport r;
    r.claim = j.at("claim").get<std::string>();
    const Json& p = j.at("params");
    r.params = SectorSpec{p.at("n").get<int>(), p.at("h").get<int>(), p.at("Q").get<int>(),
                          parse_parity(p.at("parity").get<std::string>())};
    r.expectedDim = j.at("expectedDim").get<std::size_t>();
    r.observedDim = j.at("observedDim").get<std::size_t>();
    if (!j.at("equalAsSubspaces").is_null()) {
        r.equalAsSubspaces = j.at("equalAsSubspaces").get<bool>();
    }
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    r.pass = j.at("pass").get<bool>();
    if (j.contains("details")) {
        for (const auto& [k, v] : j.at("details").items()) {
            r.details.emplace_back(k, v.get<std::int64_t>());
        }
    }
    if (j.contains("note")) {
        r.note = j.at("note").get<std::string>();
    }
    return r;
}

Json verification_document(const JobConfig& cfg, const std::vector<VerificationReport>& reports) {
    Json doc;
    doc["convention"] = kConventionNote;
    Json c;
    c["n"] = cfg.n;
    c["hMax"] = cfg.hMax;
    c["Q"] = cfg.Q;
    c["parity"] = parity_name(cfg.parity);
    c["suites"] = cfg.suites;
    doc["config"] = c;
    Json list = Json::array();
    bool pass = true;
    for (const auto& r : reports) {
        list.push_back(report_to_json(r));
        pass = pass && r.pass;
    }
    doc["reports"] = list;
    doc["pass"] = pass;
    return doc;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string equal_text(const VerificationReport& r) {
    return r.equalAsSubspaces ? (*r.equalAsSubspaces ? "true" : "false") : "";
}

}  // namespace

std::string render_reports(const JobConfig& cfg, const std::vector<VerificationReport>& reports, Format f) {
    std::ostringstream out;
    switch (f) {
        case Format::Json:
            out << verification_document(cfg, reports).dump(2) << "\n";
            break;
        case Format::Csv:
            out << "claim,n,h,Q,parity,expectedDim,observedDim,equalAsSubspaces,pass,witnesses\n";
            for (const auto& r : reports) {
                std::string w;
                for (const auto& s : r.witnesses) {
                    w += (w.empty() ? "" : "; ") + s;
                }
                out << r.claim << ',' << r.params.n << ',' << r.params.h << ',' << r.params.Q << ','
                    << parity_name(r.params.parity) << ',' << r.expectedDim << ',' << r.observedDim << ','
                    << equal_text(r) << ',' << (r.pass ? "true" : "false") << ',' << csv_field(w) << "\n";
            }
            break;
        case Format::Text: {
            out << "# " << kConventionNote << "\n";
            out << std::left << std::setw(11) << "claim" << std::setw(4) << "n" << std::setw(4) << "h" << std::setw(4)
                << "Q" << std::setw(7) << "parity" << std::right << std::setw(10) << "expected" << std::setw(10)
                << "observed" << std::setw(7) << "equal" << "  result\n";
            bool all = true;
            for (const auto& r : reports) {
                all = all && r.pass;
                out << std::left << std::setw(11) << r.claim << std::setw(4) << r.params.n << std::setw(4)
                    << r.params.h << std::setw(4) << r.params.Q << std::setw(7) << parity_name(r.params.parity)
                    << std::right << std::setw(10) << r.expectedDim << std::setw(10) << r.observedDim
                    << std::setw(7) << equal_text(r) << "  " << (r.pass ? "PASS" : "FAIL");
                if (!r.note.empty()) {
                    out << "  (" << r.note << ")";
                }
                out << "\n";
                for (const auto& w : r.witnesses) {
                    out << "    witness: " << w << "\n";
                }
            }
            out << (all ? "all suites passed" : "some suites failed") << " (" << reports.size() << " reports)\n";
            break;
        }
    }
    return out.str();
}

Json subspace_to_json(const SubspaceBasis& b) {
    Json j;
    if (b.ambient()) {
        j["ambient"] = sector_to_json(b.ambient()->spec());
        Json monos = Json::array();
        for (const auto& m : b.ambient()->monomials()) {
            monos.push_back(m.str());
        }
        j["monomials"] = monos;
    } else {
        j["ambientDim"] = b.ambient_dim();
    }
    Json vecs = Json::array();
    for (const auto& v : b.vectors()) {
        Json entries = Json::array();
        for (const auto& [idx, coef] : v) {
            entries.push_back(Json::array({idx, coef.str()}));
        }
        vecs.push_back(entries);
    }
    j["dim"] = b.dim();
    j["vectors"] = vecs;
    return j;
}

DimensionTables aggregate(const std::vector<Json>& documents) {
    // Keyed maps give a deterministic order and drop duplicates.
    std::map<std::tuple<int, std::string, int, int>, DimensionTables::Cell> cells;
    std::map<std::tuple<int, std::string, int, int>, DimensionTables::KernelRow> kernels;
    for (const auto& doc : documents) {
        for (const auto& rj : doc.at("reports")) {
            VerificationReport r = report_from_json(rj);
            const std::string parity = parity_name(r.params.parity);
            if (r.claim == "triangle") {
                for (const auto& [key, value] : r.details) {
                    int l = 0, j = 0;
                    if (std::sscanf(key.c_str(), "triangle.l%d.j%d", &l, &j) == 2) {
                        cells[{r.params.n, parity, l, j}] = {r.params.n, l, j, r.params.Q, parity, value};
                    }
                }
            } else if (r.claim == "theorem") {
                kernels[{r.params.n, parity, r.params.h, r.params.Q}] = {r.params.n, r.params.h, r.params.Q, parity,
                                                                         static_cast<std::int64_t>(r.observedDim)};
            }
        }
    }
    DimensionTables t;
    for (const auto& [k, c] : cells) {
        t.triangle.push_back(c);
    }
    for (const auto& [k, row] : kernels) {
        t.twistorKernel.push_back(row);
    }
    return t;
}

std::string render_tables(const DimensionTables& t, Format f) {
    std::ostringstream out;
    if (f == Format::Json) {
        Json doc;
        doc["convention"] = kConventionNote;
        Json tri = Json::array();
        for (const auto& c : t.triangle) {
            tri.push_back({{"n", c.n}, {"parity", c.parity}, {"l", c.l}, {"j", c.j}, {"Q", c.Q}, {"dim", c.dim}});
        }
        Json ker = Json::array();
        for (const auto& k : t.twistorKernel) {
            ker.push_back({{"n", k.n}, {"parity", k.parity}, {"h", k.h}, {"Q", k.Q}, {"dim", k.dim}});
        }
        doc["triangle"] = tri;
        doc["twistorKernel"] = ker;
        out << doc.dump(2) << "\n";
        return out.str();
    }

    // One grid per (n, parity): rows l, columns j, cell dim X_s^j M_l.
    std::map<std::pair<int, std::string>, std::map<std::pair<int, int>, std::int64_t>> grids;
    int maxJ = 0;
    for (const auto& c : t.triangle) {
        grids[{c.n, c.parity}][{c.l, c.j}] = c.dim;
        maxJ = std::max(maxJ, c.j);
    }
    if (f == Format::Csv) {
        out << "n,parity,l";
        for (int j = 0; j <= maxJ; ++j) {
            out << ",j" << j;
        }
        out << "\n";
        for (const auto& [key, grid] : grids) {
            int maxL = 0;
            for (const auto& [lj, d] : grid) {
                maxL = std::max(maxL, lj.first);
            }
            for (int l = 0; l <= maxL; ++l) {
                out << key.first << ',' << key.second << ',' << l;
                for (int j = 0; j <= maxJ; ++j) {
                    auto it = grid.find({l, j});
                    out << ',';
                    if (it != grid.end()) {
                        out << it->second;
                    }
                }
                out << "\n";
            }
        }
        return out.str();
    }

    out << "# " << kConventionNote << "\n";
    for (const auto& [key, grid] : grids) {
        out << "n=" << key.first << " parity=" << key.second << ": dim X_s^j M_l (rows l, columns j)\n";
        int maxL = 0;
        for (const auto& [lj, d] : grid) {
            maxL = std::max(maxL, lj.first);
        }
        out << std::setw(6) << "l\\j";
        for (int j = 0; j <= maxJ; ++j) {
            out << std::setw(8) << j;
        }
        out << "\n";
        for (int l = 0; l <= maxL; ++l) {
            out << std::setw(6) << l;
            for (int j = 0; j <= maxJ; ++j) {
                auto it = grid.find({l, j});
                out << std::setw(8) << (it != grid.end() ? std::to_string(it->second) : ".");
            }
            out << "\n";
        }
    }
    for (const auto& k : t.twistorKernel) {
        out << "dim Ker T_s  n=" << k.n << " h=" << k.h << " Q=" << k.Q << " parity=" << k.parity << ": " << k.dim
            << "\n";
    }
    return out.str();
}

}  // namespace sympspin
