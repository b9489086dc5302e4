#include "homcalc/commands.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "homcalc/errors.hpp"
#include "homcalc/render.hpp"
#include "homcalc/session.hpp"

namespace homcalc {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/* Workspace cache: one textual file per (session, command, flags) content
 * hash, `exit <code>` on the first line and the body after it. A shared
 * advisory lock guards readers, an exclusive one writers. */
class Workspace {
public:
    explicit Workspace(std::string dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    std::optional<CommandResult> load(const std::string& key) {
        std::string path = entry_path(key);
        Lock lock(lock_path(), LOCK_SH);
        std::ifstream in(path, std::ios::binary);
        if (!in) return std::nullopt;
        std::string header;
        if (!std::getline(in, header) || header.rfind("exit ", 0) != 0) return std::nullopt;
        CommandResult r;
        r.exit_code = std::atoi(header.c_str() + 5);
        std::ostringstream body;
        body << in.rdbuf();
        r.body = body.str();
        return r;
    }

    void store(const std::string& key, const CommandResult& r) {
        Lock lock(lock_path(), LOCK_EX);
        std::ofstream out(entry_path(key), std::ios::binary | std::ios::trunc);
        out << "exit " << r.exit_code << "\n" << r.body;
    }

private:
    struct Lock {
        int fd;
        Lock(const std::string& path, int op) : fd(::open(path.c_str(), O_CREAT | O_RDWR, 0644)) {
            if (fd >= 0) ::flock(fd, op);
        }
        ~Lock() {
            if (fd >= 0) {
                ::flock(fd, LOCK_UN);
                ::close(fd);
            }
        }
    };

    std::string entry_path(const std::string& key) const { return dir_ + "/" + key + ".res"; }
    std::string lock_path() const { return dir_ + "/.lock"; }
    std::string dir_;
};

std::vector<std::string> split_modules(const std::string& arg) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : arg) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    if (out.size() != 2) throw UsageError("--modules needs exactly two names, M,N");
    return out;
}

WindowKind parse_kind(const std::string& s) {
    if (s == "tor") return WindowKind::tor;
    if (s == "ext") return WindowKind::ext;
    if (s == "stable-tor") return WindowKind::stable_tor;
    if (s == "stable-ext") return WindowKind::stable_ext;
    throw UsageError("unknown window kind '" + s + "'");
}

VanishingWindow compute_window(const SessionFile& s, WindowKind kind, const std::string& mnames,
                               int lo, int hi, int bound) {
    auto names = split_modules(mnames);
    const ModulePresentation& M = s.module(names[0]);
    const ModulePresentation& N = s.module(names[1]);
    std::string prov = names[0] + "," + names[1];
    switch (kind) {
        case WindowKind::tor: return window_from_tor(tor(M, N, hi), kind, prov);
        case WindowKind::ext: return window_from_tor(ext(M, N, hi), kind, prov);
        case WindowKind::stable_tor:
            return window_from_stable(stable_tor(M, N, lo, hi, bound), kind, prov);
        case WindowKind::stable_ext:
            return window_from_stable(stable_ext(M, N, lo, hi, bound), kind, prov);
    }
    throw UsageError("unreachable");
}

ModulePresentation restrict_to_Q(const HypersurfaceTower& tower, const ModulePresentation& N) {
    const PolyMatrix& rel = N.relations();
    PolyMatrix out(tower.Q->field(), tower.Q->nvars(), N.ambient_rank(),
                   rel.cols() + N.ambient_rank());
    for (int i = 0; i < rel.rows(); ++i)
        for (int j = 0; j < rel.cols(); ++j) out.set(i, j, rel.at(i, j));
    for (int i = 0; i < N.ambient_rank(); ++i) out.set(i, rel.cols() + i, tower.x);
    return ModulePresentation(tower.Q, N.ambient_rank(), N.ambient_shifts(), std::move(out));
}

int verdict_exit(Verdict v) {
    return (v == Verdict::Violation || v == Verdict::Inconclusive) ? 2 : 0;
}

struct Options {
    std::string module;
    std::string modules;
    std::string kind = "stable-tor";
    std::string emit;
    int steps = 0;
    int from = 0, to = 0;
    int bound = 6;
    int width = 1;
    int J = 4, imax = -1, W = 6;
    int n = 0, q = 1, c = 0, r = -1;
    std::uint32_t field = 2;
    bool json = false;
};

CommandResult dispatch(const std::vector<std::string>& args, const std::string& session_text) {
    CLI::App app{"exact homological algebra over graded quotient rings"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_flag("--json", o.json, "render JSON instead of TSV");
        return sub;
    };

    CLI::App* betti_cmd = common(app.add_subcommand("betti", "Betti numbers"));
    betti_cmd->add_option("--module", o.module)->required();
    betti_cmd->add_option("--steps", o.steps)->required();

    CLI::App* tor_cmd = common(app.add_subcommand("tor", "ordinary Tor window"));
    tor_cmd->add_option("--modules", o.modules)->required();
    tor_cmd->add_option("--to", o.to)->required();

    CLI::App* ext_cmd = common(app.add_subcommand("ext", "ordinary Ext window"));
    ext_cmd->add_option("--modules", o.modules)->required();
    ext_cmd->add_option("--to", o.to)->required();

    CLI::App* stor_cmd = common(app.add_subcommand("stable-tor", "stable Tor window"));
    stor_cmd->add_option("--modules", o.modules)->required();
    stor_cmd->add_option("--from", o.from)->required();
    stor_cmd->add_option("--to", o.to)->required();
    stor_cmd->add_option("--bound", o.bound);

    CLI::App* sext_cmd = common(app.add_subcommand("stable-ext", "stable Ext window"));
    sext_cmd->add_option("--modules", o.modules)->required();
    sext_cmd->add_option("--from", o.from)->required();
    sext_cmd->add_option("--to", o.to)->required();
    sext_cmd->add_option("--bound", o.bound);

    CLI::App* gdim_cmd = common(app.add_subcommand("gdim", "Gorenstein-dimension-zero check"));
    gdim_cmd->add_option("--module", o.module)->required();
    gdim_cmd->add_option("--bound", o.bound);

    CLI::App* cres_cmd = common(app.add_subcommand("complete-res", "complete resolution window"));
    cres_cmd->add_option("--module", o.module)->required();
    cres_cmd->add_option("--width", o.width)->required();
    cres_cmd->add_option("--bound", o.bound);

    CLI::App* hmt_cmd = common(app.add_subcommand("homotopies", "higher homotopy system"));
    hmt_cmd->add_option("--module", o.module)->required();
    hmt_cmd->add_option("--j", o.J);
    hmt_cmd->add_option("--imax", o.imax);

    CLI::App* sham_cmd = common(app.add_subcommand("shamash", "Shamash resolution"));
    sham_cmd->add_option("--module", o.module)->required();
    sham_cmd->add_option("--w", o.W)->required();
    sham_cmd->add_option("--imax", o.imax);

    CLI::App* prer_cmd = common(app.add_subcommand("prerigidity", "pre-rigidity degree"));
    prer_cmd->add_option("--modules", o.modules)->required();
    prer_cmd->add_option("--bound", o.bound);
    prer_cmd->add_option("--j", o.J);
    prer_cmd->add_option("--imax", o.imax);

    CLI::App* poin_cmd = common(app.add_subcommand("poincare", "Poincare-series relation"));
    poin_cmd->add_option("--module", o.module)->required();
    poin_cmd->add_option("--to", o.to);

    CLI::App* len_cmd = common(app.add_subcommand("length", "length / Hilbert data"));
    len_cmd->add_option("--module", o.module)->required();
    len_cmd->add_option("--bound", o.bound);

    CLI::App* check_cmd = app.add_subcommand("check", "theorem checkers");
    check_cmd->require_subcommand(1);
    CLI::App* gap_cmd = common(check_cmd->add_subcommand("gap", "gap vanishing"));
    gap_cmd->add_option("--modules", o.modules)->required();
    gap_cmd->add_option("--kind", o.kind);
    gap_cmd->add_option("--n", o.n)->required();
    gap_cmd->add_option("--q", o.q)->required();
    gap_cmd->add_option("--c", o.c)->required();
    gap_cmd->add_option("--from", o.from)->required();
    gap_cmd->add_option("--to", o.to)->required();
    gap_cmd->add_option("--bound", o.bound);

    CLI::App* cons_cmd = common(check_cmd->add_subcommand("consecutive", "consecutive vanishing"));
    cons_cmd->add_option("--modules", o.modules)->required();
    cons_cmd->add_option("--c", o.c)->required();
    cons_cmd->add_option("--to", o.to)->default_val(8);

    CLI::App* torci_cmd = common(check_cmd->add_subcommand("torci", "two-parity runs"));
    torci_cmd->add_option("--modules", o.modules)->required();
    torci_cmd->add_option("--from", o.from)->required();
    torci_cmd->add_option("--to", o.to)->required();
    torci_cmd->add_option("--bound", o.bound);

    CLI::App* prem_cmd = common(check_cmd->add_subcommand("premain", "pre-rigidity descent"));
    prem_cmd->add_option("--modules", o.modules)->required();
    prem_cmd->add_option("--to", o.to)->default_val(8);
    prem_cmd->add_option("--r", o.r);

    CLI::App* lenf_cmd = common(check_cmd->add_subcommand("length-formula", "length formula"));
    lenf_cmd->add_option("--modules", o.modules)->required();
    lenf_cmd->add_option("--n", o.n)->required();

    CLI::App* coro_cmd = common(check_cmd->add_subcommand("corollaries", "degree-0 corollaries"));
    coro_cmd->add_option("--modules", o.modules)->required();
    coro_cmd->add_option("--to", o.to)->default_val(10);

    CLI::App* pex_cmd = common(app.add_subcommand("paper-example", "worked example generator"));
    pex_cmd->add_option("--n", o.n)->required();
    pex_cmd->add_option("--field", o.field)->required();
    pex_cmd->add_option("--emit", o.emit);

    {
        std::vector<const char*> cargv;
        cargv.push_back("hc");
        for (const auto& a : args) cargv.push_back(a.c_str());
        app.parse(int(cargv.size()), cargv.data());
    }

    if (pex_cmd->parsed()) {
        PaperExampleSpec spec = paper_example(o.n, o.field);
        if (!o.emit.empty()) {
            std::ofstream out(o.emit, std::ios::binary | std::ios::trunc);
            if (!out) throw UsageError("cannot write '" + o.emit + "'");
            out << spec.session_text;
        }
        return CommandResult{0, render_manifest(spec, o.json), ""};
    }

    if (session_text.empty()) throw UsageError("missing --session");
    SessionFile session = parse_session(session_text);

    if (betti_cmd->parsed())
        return {0, render_betti(betti(session.module(o.module), o.steps), o.json), ""};
    if (tor_cmd->parsed())
        return {0,
                render_window(compute_window(session, WindowKind::tor, o.modules, 0, o.to, 0),
                              o.json),
                ""};
    if (ext_cmd->parsed())
        return {0,
                render_window(compute_window(session, WindowKind::ext, o.modules, 0, o.to, 0),
                              o.json),
                ""};
    if (stor_cmd->parsed())
        return {0,
                render_window(compute_window(session, WindowKind::stable_tor, o.modules, o.from,
                                             o.to, o.bound),
                              o.json),
                ""};
    if (sext_cmd->parsed())
        return {0,
                render_window(compute_window(session, WindowKind::stable_ext, o.modules, o.from,
                                             o.to, o.bound),
                              o.json),
                ""};
    if (gdim_cmd->parsed())
        return {0, render_gdim(gdim_zero_check(session.module(o.module), o.bound), o.json), ""};
    if (cres_cmd->parsed())
        return {0,
                render_complete_resolution(
                    complete_resolution(session.module(o.module), o.width, o.bound), o.json),
                ""};
    if (hmt_cmd->parsed()) {
        int imax = o.imax > 0 ? o.imax : (o.J + 2) / 2;
        HomotopySystem H =
            higher_homotopies(session.top_tower(), session.module(o.module), o.J, imax);
        return {0, render_homotopies(H, session.ring(), o.json), ""};
    }
    if (sham_cmd->parsed()) {
        int J = o.W;
        int imax = o.imax > 0 ? o.imax : (J + 2) / 2;
        HomotopySystem H =
            higher_homotopies(session.top_tower(), session.module(o.module), J, imax);
        return {0, render_shamash(shamash_resolution(H, o.W), o.json), ""};
    }
    if (prer_cmd->parsed()) {
        auto names = split_modules(o.modules);
        int imax = o.imax > 0 ? o.imax : (o.J + 2) / 2;
        HomotopySystem H =
            higher_homotopies(session.top_tower(), session.module(names[0]), o.J, imax);
        PrerigidityReport r = prerigidity_degree(H, session.module(names[1]), o.bound);
        return {0, render_prerigidity(r, o.json), ""};
    }
    if (poin_cmd->parsed()) {
        int t_bound = poin_cmd->count("--to") ? o.to : 8;
        HomotopySystem H = higher_homotopies(session.top_tower(), session.module(o.module),
                                             std::max(4, t_bound), 2);
        PoincareReport r = check_poincare(H, session.module(o.module), t_bound);
        return {r.holds ? 0 : 2, render_poincare(r, o.json), ""};
    }
    if (len_cmd->parsed()) {
        int bound = len_cmd->count("--bound") ? o.bound : 12;
        return {0, render_hilbert(length_or_hilbert(session.module(o.module), bound), o.json),
                ""};
    }
    if (gap_cmd->parsed()) {
        VanishingWindow w =
            compute_window(session, parse_kind(o.kind), o.modules, o.from, o.to, o.bound);
        TheoremReport r = check_gap(w, o.n, o.q, o.c);
        return {verdict_exit(r.verdict), render_report(r, o.json), ""};
    }
    if (cons_cmd->parsed()) {
        auto names = split_modules(o.modules);
        int d = depth(session.module(names[0])).depth_difference;
        VanishingWindow w = compute_window(session, WindowKind::tor, o.modules, 0, o.to, 0);
        TheoremReport r = check_consecutive(w, o.c, d);
        return {verdict_exit(r.verdict), render_report(r, o.json), ""};
    }
    if (torci_cmd->parsed()) {
        auto names = split_modules(o.modules);
        int d = depth(session.module(names[0])).ring_depth;
        VanishingWindow w =
            compute_window(session, WindowKind::stable_tor, o.modules, o.from, o.to, o.bound);
        TheoremReport r = scan_torci(w, w, d);
        return {verdict_exit(r.verdict), render_report(r, o.json), ""};
    }
    if (prem_cmd->parsed()) {
        auto names = split_modules(o.modules);
        const HypersurfaceTower& tower = session.top_tower();
        const ModulePresentation& M = session.module(names[0]);
        const ModulePresentation& N = session.module(names[1]);
        HomotopySystem H = higher_homotopies(tower, M, std::max(o.to, 2), 2);
        int r_deg = o.r;
        if (r_deg < 0) {
            PrerigidityReport pr = prerigidity_degree(H, N, 4);
            if (!pr.degree) throw PreconditionUnwitnessed("pre-rigidity degree not within bound 4");
            r_deg = *pr.degree;
        }
        VanishingWindow w_R = window_from_tor(tor(M, N, o.to), WindowKind::tor, "R-side");
        VanishingWindow w_Q =
            window_from_tor(tor(H.M_over_Q, restrict_to_Q(tower, N), o.to), WindowKind::tor,
                            "Q-side");
        TheoremReport rep = check_premain(w_R, w_Q, r_deg);
        return {verdict_exit(rep.verdict), render_report(rep, o.json), ""};
    }
    if (lenf_cmd->parsed()) {
        auto names = split_modules(o.modules);
        TheoremReport r = check_length_formula(session.top_tower(), session.module(names[0]),
                                               session.module(names[1]), o.n);
        return {verdict_exit(r.verdict), render_report(r, o.json), ""};
    }
    if (coro_cmd->parsed()) {
        auto names = split_modules(o.modules);
        std::vector<TheoremReport> rs = check_corollaries(
            session.top_tower(), session.module(names[0]), session.module(names[1]), o.to);
        int code = 0;
        for (const auto& r : rs) code = std::max(code, verdict_exit(r.verdict));
        return {code, render_reports(rs, o.json), ""};
    }
    throw UsageError("unknown command");
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& argv,
                          const std::optional<std::string>& session_text_opt) {
    std::string session_path, workspace;
    bool stats = false;
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < argv.size(); ++i) {
        const std::string& a = argv[i];
        auto take = [&](std::string& into) {
            if (i + 1 >= argv.size()) throw UsageError(a + " needs a value");
            into = argv[++i];
        };
        if (a == "--session") {
            take(session_path);
        } else if (a == "--workspace") {
            take(workspace);
        } else if (a == "--stats") {
            stats = true;
        } else {
            rest.push_back(a);
        }
    }
    if (workspace.empty())
        if (const char* env = std::getenv("HC_WORKSPACE")) workspace = env;

    try {
        std::string session_text;
        if (session_text_opt) {
            session_text = *session_text_opt;
        } else if (!session_path.empty()) {
            std::ifstream in(session_path, std::ios::binary);
            if (!in) throw UsageError("cannot read session file '" + session_path + "'");
            std::ostringstream buf;
            buf << in.rdbuf();
            session_text = buf.str();
        }

        std::string cache_key;
        std::optional<Workspace> ws;
        if (!workspace.empty()) {
            std::ostringstream keysrc;
            keysrc << session_text << "\n--\n";
            for (const auto& a : rest) keysrc << a << "\x1f";
            std::ostringstream hex;
            hex << std::hex << fnv1a(keysrc.str());
            cache_key = hex.str();
            ws.emplace(workspace);
            if (auto hit = ws->load(cache_key)) {
                CommandResult r = *hit;
                if (stats) r.diagnostics = "stats: groebner_calls=0 cache=hit\n";
                return r;
            }
        }

        std::uint64_t before = GroebnerStats::count();
        CommandResult r = dispatch(rest, session_text);
        std::uint64_t after = GroebnerStats::count();
        if (ws) ws->store(cache_key, r);
        if (stats) {
            std::ostringstream d;
            d << "stats: groebner_calls=" << (after - before)
              << " cache=" << (ws ? "miss" : "off") << "\n";
            r.diagnostics += d.str();
        }
        return r;
    } catch (const CLI::ParseError& e) {
        return CommandResult{1, "", std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return CommandResult{1, "", std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace homcalc
