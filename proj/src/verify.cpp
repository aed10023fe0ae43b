#include "blockspec/verify.hpp"

#include "blockspec/bounds.hpp"
#include "blockspec/charpoly.hpp"
#include "blockspec/enumeration.hpp"
#include "blockspec/identities.hpp"
#include "blockspec/io.hpp"
#include "blockspec/parallel.hpp"

#include <iomanip>
#include <random>
#include <sstream>

namespace blockspec {

const char* to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Pass: return "pass";
        case ClaimStatus::Fail: return "fail";
        case ClaimStatus::Undecided: return "undecided";
        case ClaimStatus::Skip: return "skip";
    }
    return "?";
}

int VerifyReport::exit_code() const {
    bool undecided = false;
    for (const auto& c : claims) {
        if (c.status == ClaimStatus::Fail) return 2;
        if (c.status == ClaimStatus::Undecided) undecided = true;
    }
    return undecided ? 3 : 0;
}

namespace {

struct Member {
    const ClassMember* source;
    IntPolynomial poly;
    RationalInterval rho;
};

void tighten(Member& m, const Rational& width) {
    if (!m.rho.is_point() && m.rho.width() > width) m.rho = refine_largest_root(m.poly, m.rho.lo, m.rho.hi, width);
}

// rho(a) < rho(b), certified; refines once when the enclosures touch.
bool strictly_below(Member& a, Member& b) {
    if (a.rho.hi < b.rho.lo) return true;
    const Rational fine(Integer(1), Integer("1000000000000000000000000000000"));
    tighten(a, fine);
    tighten(b, fine);
    return a.rho.hi < b.rho.lo;
}

std::string sci(const Rational& r) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(3) << r.get_d();
    return os.str();
}

ClaimResult base(const char* claim, int q, int b, long graphs) {
    ClaimResult c;
    c.claim = claim;
    c.q = q;
    c.b = b;
    c.n = q * b + 1;
    c.graphs = graphs;
    return c;
}

}  // namespace

std::vector<ClaimResult> verify_class(int q, int b, const Rational& width, int jobs, int order_budget) {
    const auto cls = enumerate_class(q, b, jobs);
    const long count = static_cast<long>(cls.size());
    std::vector<Member> members(cls.size());
    parallel_for(cls.size(), jobs, [&](std::size_t i) {
        members[i].source = &cls[i];
        members[i].poly = charpoly_schwenk(cls[i].graph);
        members[i].rho = spectral_radius(cls[i].graph, width).enclosure;
    });

    int star_idx = -1, path_idx = -1;
    for (int i = 0; i < static_cast<int>(members.size()); ++i) {
        if (is_star(cls[i].graph)) star_idx = i;
        if (is_path_block(cls[i].graph)) path_idx = i;
    }
    std::vector<ClaimResult> out;

    // Unique maximizer.
    {
        ClaimResult c = base("max-star", q, b, count);
        if (star_idx < 0) {
            c.status = ClaimStatus::Fail;
            c.detail = "S(n,q) missing from the enumeration";
        } else {
            for (int i = 0; i < count && c.status == ClaimStatus::Pass; ++i) {
                if (i == star_idx || strictly_below(members[i], members[star_idx])) continue;
                c.status = ClaimStatus::Fail;
                c.detail = "rho not below rho(S): " + members[i].rho.to_decimal();
                c.witness = cls[i].graph;
            }
            if (c.status == ClaimStatus::Pass) c.detail = "rho(S) = " + members[star_idx].rho.to_decimal();
        }
        out.push_back(std::move(c));
    }

    // Unique minimizer with margin.
    {
        ClaimResult c = base("min-path", q, b, count);
        if (path_idx < 0) {
            c.status = ClaimStatus::Fail;
            c.detail = "P^q_b missing from the enumeration";
        } else {
            std::optional<Rational> margin;
            for (int i = 0; i < count && c.status == ClaimStatus::Pass; ++i) {
                if (i == path_idx) continue;
                if (!strictly_below(members[path_idx], members[i])) {
                    c.status = ClaimStatus::Fail;
                    c.detail = "rho not above rho(P): " + members[i].rho.to_decimal();
                    c.witness = cls[i].graph;
                    break;
                }
                const Rational gap = members[i].rho.lo - members[path_idx].rho.hi;
                if (!margin || gap < *margin) margin = gap;
            }
            const Rational need(1, 100000000);
            if (c.status == ClaimStatus::Pass && margin && *margin <= need) {
                c.status = ClaimStatus::Fail;
                c.detail = "margin " + sci(*margin) + " <= 1e-8";
            }
            if (c.status == ClaimStatus::Pass)
                c.detail = "rho(P) = " + members[path_idx].rho.to_decimal() +
                           (margin ? "; margin >= " + sci(*margin) : std::string("; single graph"));
        }
        out.push_back(std::move(c));
    }

    // G < P^q_b for every non-path member.
    {
        ClaimResult c = base("path-dominates", q, b, count);
        if (path_idx < 0) {
            c.status = ClaimStatus::Fail;
            c.detail = "P^q_b missing from the enumeration";
        } else {
            std::vector<OrderVerdict> verdicts(cls.size());
            parallel_for(cls.size(), jobs, [&](std::size_t i) {
                if (static_cast<int>(i) == path_idx) return;
                verdicts[i] = precedes(members[i].poly, members[path_idx].poly, order_budget);
            });
            int holds = 0, fails = 0, undecided = 0;
            for (int i = 0; i < count; ++i) {
                if (i == path_idx) continue;
                switch (verdicts[i].outcome) {
                    case Outcome::Holds: ++holds; break;
                    case Outcome::Fails:
                        if (!c.witness) {
                            c.witness = cls[i].graph;
                            c.detail = verdicts[i].reason;
                        }
                        ++fails;
                        break;
                    case Outcome::Undecided:
                        if (!c.witness) c.witness = cls[i].graph;
                        ++undecided;
                        break;
                }
            }
            c.status = fails ? ClaimStatus::Fail : undecided ? ClaimStatus::Undecided : ClaimStatus::Pass;
            std::ostringstream os;
            os << "holds " << holds << ", fails " << fails << ", undecided " << undecided;
            if (!c.detail.empty()) os << "; first failure: " << c.detail;
            c.detail = os.str();
        }
        out.push_back(std::move(c));
    }

    // Lower bound, stated for n - 1 > q.
    {
        ClaimResult c = base("lower-bound", q, b, count);
        const QuadraticSurd lower = lower_bound(q);
        if (b < 2) {
            c.status = ClaimStatus::Skip;
            c.detail = "n-1 = q";
        } else {
            const QuadraticSurd threshold = lower - QuadraticSurd::rational(Rational(1, 1000000000));
            int violations = 0;
            for (int i = 0; i < count; ++i) {
                if (compare_spectral_radius(members[i].poly, members[i].rho, threshold) >= 0) continue;
                if (!violations) {
                    c.witness = cls[i].graph;
                    c.detail = "rho = " + members[i].rho.to_decimal() + " < ";
                }
                ++violations;
            }
            c.status = violations ? ClaimStatus::Fail : ClaimStatus::Pass;
            std::ostringstream os;
            os << c.detail << "lower = " << lower.to_string() << " ~ " << lower.to_decimal(10);
            if (violations) os << "; " << violations << " violation(s)";
            c.detail = os.str();
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ClaimResult> verify_identities(std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    std::vector<ClaimResult> out;
    for (IdentityName id : kAllIdentities) {
        ClaimResult c;
        c.claim = std::string("identity:") + to_string(id);
        c.graphs = samples;
        int zero = 0;
        for (int s = 0; s < samples; ++s) {
            const IdentityInstance inst = random_instance(id, rng);
            if (identity_check(id, inst).is_zero()) {
                ++zero;
            } else if (c.detail.empty()) {
                c.detail = "nonzero on " + inst.describe() + "; ";
            }
        }
        c.status = zero == samples ? ClaimStatus::Pass : ClaimStatus::Fail;
        c.detail += std::to_string(zero) + "/" + std::to_string(samples) + " zero; seed " + std::to_string(seed);
        out.push_back(std::move(c));
    }
    return out;
}

VerifyReport run_verify(const VerifyConfig& config) {
    if (!(config.width > 0)) throw std::invalid_argument("width must be positive");
    if (config.qs.empty() || config.bs.empty()) throw std::invalid_argument("empty q or b range");
    VerifyReport report{config, {}};
    for (int q : config.qs)
        for (int b : config.bs)
            for (auto& c : verify_class(q, b, config.width, config.jobs, config.order_budget))
                report.claims.push_back(std::move(c));
    if (config.identity_samples > 0)
        for (auto& c : verify_identities(config.seed, config.identity_samples)) report.claims.push_back(std::move(c));
    return report;
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string header_comment(const VerifyConfig& c) {
    std::ostringstream os;
    os << "# blockspec verify v" << kVerifyCsvVersion << " seed=" << c.seed << " width=" << c.width.get_str()
       << " budget=" << c.order_budget << " samples=" << c.identity_samples;
    return os.str();
}

std::string witness_text(const ClaimResult& c) { return c.witness ? to_json(*c.witness).dump() : std::string(); }

}  // namespace

std::string render_csv(const VerifyReport& report) {
    std::ostringstream os;
    os << header_comment(report.config) << '\n';
    os << "claim,q,b,n,graphs,status,detail,witness\n";
    for (const auto& c : report.claims) {
        os << csv_field(c.claim) << ',';
        if (c.q) os << c.q << ',' << c.b << ',' << c.n;
        else os << ",,";
        os << ',' << c.graphs << ',' << to_string(c.status) << ',' << csv_field(c.detail) << ','
           << csv_field(witness_text(c)) << '\n';
    }
    return os.str();
}

std::string render_json(const VerifyReport& report) {
    Json claims = Json::array();
    for (const auto& c : report.claims) {
        Json j{{"claim", c.claim}};
        if (c.q) {
            j["q"] = c.q;
            j["b"] = c.b;
            j["n"] = c.n;
        }
        j["graphs"] = c.graphs;
        j["status"] = to_string(c.status);
        j["detail"] = c.detail;
        if (c.witness) j["witness"] = to_json(*c.witness);
        claims.push_back(std::move(j));
    }
    Json out{{"version", kVerifyCsvVersion},
             {"seed", report.config.seed},
             {"width", report.config.width.get_str()},
             {"budget", report.config.order_budget},
             {"samples", report.config.identity_samples},
             {"claims", std::move(claims)},
             {"exit", report.exit_code()}};
    return out.dump(2) + "\n";
}

std::string render_text(const VerifyReport& report) {
    std::ostringstream os;
    os << header_comment(report.config) << '\n';
    for (const auto& c : report.claims) {
        os << std::left << std::setw(10) << to_string(c.status) << std::setw(30) << c.claim;
        if (c.q) os << " q=" << c.q << " b=" << c.b << " n=" << c.n;
        os << " graphs=" << c.graphs << "  " << c.detail << '\n';
        if (c.witness && c.status != ClaimStatus::Pass) os << "          witness " << witness_text(c) << '\n';
    }
    return os.str();
}

}  // namespace blockspec
