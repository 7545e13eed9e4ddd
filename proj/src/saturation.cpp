#include "pmf/saturation.hpp"

#include "pmf/hash.hpp"

#include <chrono>
#include <sstream>

namespace pmf {

ModTerms to_modp(const QPoly& f, uint32_t p)
{
    ModTerms t;
    t.reserve(f.size());
    for (auto& x : f.terms())
        t.push_back({x.m, static_cast<uint32_t>(reduce_mod(x.c, p))});
    return t;
}

GradedGB& ModularIdeal::basis(int degree, double time_limit)
{
    if (gb && gb->computed_degree() >= degree)
        return *gb;
    if (!order)
        throw std::logic_error("ModularIdeal::basis: no order installed");
    if (!gb || horizon < degree) {
        gb = std::make_unique<GradedGB>(order, p, degree);
        horizon = degree;
        for (auto& g : gens)
            if (!g.empty())
                gb->add_generator(g);
    }
    gb->set_time_limit(time_limit);
    gb->compute(degree);
    return *gb;
}

namespace {

double now()
{
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
}

std::vector<int> last_priority(int n, int v)
{
    std::vector<int> prio;
    for (int i = 0; i < n; ++i)
        if (i != v)
            prio.push_back(i);
    prio.push_back(v);
    return prio;
}

std::unique_ptr<GradedGB> fresh_basis(const ModularIdeal& m, const OrderPtr& ord, int horizon)
{
    auto gb = std::make_unique<GradedGB>(ord, m.p, horizon);
    for (auto& g : m.gens)
        if (!g.empty())
            gb->add_generator(g);
    return gb;
}

std::string input_key(const ModularIdeal& m)
{
    std::ostringstream s;
    for (size_t i = 0; i < m.rational; ++i) {
        for (auto& [mono, c] : m.gens[i]) {
            s << c;
            for (int k = 0; k < kMaxVars; ++k)
                s << ',' << int(mono.e[k]);
            s << ';';
        }
        s << '\n';
    }
    return fnv1a64_hex(s.str());
}

}  // namespace

ModularIdeal saturate_by_variables(const std::vector<QPoly>& gens, const OrderPtr& grevlex, uint32_t p, int truncation,
                                   double time_limit)
{
    ModularIdeal m;
    m.p = p;
    m.truncation = truncation;
    for (auto& g : gens)
        m.gens.push_back(to_modp(g, p));
    m.rational = m.gens.size();

    const Ring& r = grevlex->ring();
    int n = r.nvars();
    double start = now();
    int quiet = 0;
    for (int v = 0; quiet < n; v = (v + 1) % n) {
        double t0 = now();
        auto ord = make_order(MonomialOrder::wdegrevlex(grevlex->ring_ptr(), last_priority(n, v)));
        auto gb = fresh_basis(m, ord, truncation);
        gb->set_time_limit(time_limit - (t0 - start));
        gb->compute(truncation);
        SaturationStep step{v, 0, 0};
        for (auto& e : gb->basis_polys()) {
            int low = 255;
            for (auto& [mono, c] : e)
                low = std::min(low, int(mono.e[v]));
            if (low == 0)
                continue;
            ModTerms h;
            h.reserve(e.size());
            for (auto [mono, c] : e) {
                mono.e[v] = uint8_t(mono.e[v] - low);
                mono.deg = uint16_t(mono.deg - low * r.weight(v));
                h.push_back({mono, c});
            }
            if (!gb->normal_form(h).empty()) {
                m.gens.push_back(std::move(h));
                ++step.added;
            }
        }
        step.seconds = now() - t0;
        m.steps.push_back(step);
        quiet = step.added ? 1 : quiet + 1;
    }
    m.order = grevlex;
    return m;
}

std::string saturation_to_string(const ModularIdeal& m)
{
    std::ostringstream body;
    for (size_t i = m.rational; i < m.gens.size(); ++i) {
        auto& g = m.gens[i];
        body << g.size();
        for (auto& [mono, c] : g) {
            body << ' ' << c << ':';
            for (int k = 0; k < kMaxVars; ++k)
                if (mono.e[k])
                    body << k << '^' << int(mono.e[k]) << ',';
        }
        body << '\n';
    }
    std::string b = body.str();
    std::ostringstream out;
    out << "pmf-saturation 1 " << m.p << ' ' << m.truncation << ' ' << m.rational << ' ' << (m.gens.size() - m.rational)
        << ' ' << input_key(m) << ' ' << fnv1a64_hex(b) << '\n'
        << b;
    return out.str();
}

bool saturation_from_string(const std::string& text, const std::vector<QPoly>& gens, const OrderPtr& grevlex,
                            ModularIdeal& out)
{
    try {
        std::istringstream in(text);
        std::string magic, key, hash;
        int version = 0, truncation = 0;
        uint32_t p = 0;
        size_t rational = 0, extra = 0;
        if (!(in >> magic >> version >> p >> truncation >> rational >> extra >> key >> hash))
            return false;
        if (magic != "pmf-saturation" || version != 1 || rational != gens.size())
            return false;
        std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (!rest.empty() && rest[0] == '\n')
            rest.erase(0, 1);
        if (fnv1a64_hex(rest) != hash)
            return false;

        const Ring& r = grevlex->ring();
        ModularIdeal m;
        m.p = p;
        m.truncation = truncation;
        for (auto& g : gens)
            m.gens.push_back(to_modp(g, p));
        m.rational = m.gens.size();
        if (input_key(m) != key)
            return false;
        std::istringstream lines(rest);
        std::string line;
        while (std::getline(lines, line)) {
            std::istringstream ls(line);
            size_t n = 0;
            ls >> n;
            ModTerms g;
            for (size_t i = 0; i < n; ++i) {
                std::string tok;
                if (!(ls >> tok))
                    return false;
                auto colon = tok.find(':');
                if (colon == std::string::npos)
                    return false;
                uint32_t c = uint32_t(std::stoul(tok.substr(0, colon)));
                std::vector<int> ex(r.nvars(), 0);
                std::string ms = tok.substr(colon + 1);
                size_t at = 0;
                while (at < ms.size()) {
                    auto caret = ms.find('^', at), comma = ms.find(',', at);
                    if (caret == std::string::npos || comma == std::string::npos)
                        return false;
                    int var = std::stoi(ms.substr(at, caret - at));
                    if (var < 0 || var >= r.nvars())
                        return false;
                    ex[var] = std::stoi(ms.substr(caret + 1, comma - caret - 1));
                    at = comma + 1;
                }
                g.push_back({r.make(ex), c});
            }
            m.gens.push_back(std::move(g));
        }
        if (m.gens.size() - m.rational != extra)
            return false;
        if (truncation < 0)
            return false;
        m.order = grevlex;
        out = std::move(m);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

}  // namespace pmf
