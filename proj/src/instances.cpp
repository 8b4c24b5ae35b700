#include "hdec/instances.hpp"

#include <numeric>
#include <sstream>

namespace hdec {

HamCycle random_hamiltonian_cycle(int n, Kind kind, SplitMix64& rng) {
    if (n < 3) throw TooSmall("instance size must be at least 3");
    HamCycle c;
    c.kind = kind;
    c.order.resize(n);
    std::iota(c.order.begin(), c.order.end(), 0);
    for (int i = n - 1; i >= 1; --i) {
        auto j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i) + 1));
        std::swap(c.order[i], c.order[j]);
    }
    return c;
}

Instance make_instance(HamCycle x, HamCycle y) {
    Instance inst;
    inst.uni = build_union(x, y);
    inst.kind = x.kind;
    inst.n = x.n();
    inst.x = std::move(x);
    inst.y = std::move(y);
    return inst;
}

Instance generate_instance(int n, Kind kind, SplitMix64& rng) {
    HamCycle x = random_hamiltonian_cycle(n, kind, rng);
    HamCycle y = random_hamiltonian_cycle(n, kind, rng);
    return make_instance(std::move(x), std::move(y));
}

namespace {

// Vertices are 1-based in files, 0-based in memory.
void append_cycle(std::ostringstream& out, char label, const HamCycle& c) {
    out << label;
    for (VertexId v : c.order) out << ' ' << v + 1;
    out << '\n';
}

struct LineReader {
    std::istringstream in;
    int lineno = 0;

    explicit LineReader(const std::string& text) : in(text) {}

    std::string next(const std::string& what) {
        std::string line;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (!line.empty()) return line;
        }
        throw FormatError(lineno + 1, "missing " + what);
    }
};

HamCycle parse_cycle_line(const std::string& line, int lineno, char label, int n,
                          Kind kind) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag != std::string(1, label))
        throw FormatError(lineno, std::string("expected '") + label + "' line");
    HamCycle c;
    c.kind = kind;
    long v;
    while (ls >> v) {
        if (v < 1 || v > n) throw FormatError(lineno, "vertex out of range");
        c.order.push_back(static_cast<VertexId>(v - 1));
    }
    if (!ls.eof()) throw FormatError(lineno, "malformed vertex list");
    if (c.n() != n) throw FormatError(lineno, "expected exactly n vertices");
    try {
        validate_cycle(c);
    } catch (const InvalidCycle&) {
        throw;
    }
    return c;
}

}  // namespace

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "HDEC v1\n";
    out << "kind " << (inst.kind == Kind::Directed ? "directed" : "undirected") << '\n';
    out << "n " << inst.n << '\n';
    append_cycle(out, 'x', inst.x);
    append_cycle(out, 'y', inst.y);
    return out.str();
}

Instance parse_instance(const std::string& text) {
    LineReader r(text);
    if (r.next("header") != "HDEC v1") throw FormatError(r.lineno, "expected 'HDEC v1'");

    std::istringstream kl(r.next("kind line"));
    std::string tag, kindword;
    kl >> tag >> kindword;
    if (tag != "kind" || (kindword != "directed" && kindword != "undirected"))
        throw FormatError(r.lineno, "expected 'kind directed' or 'kind undirected'");
    Kind kind = kindword == "directed" ? Kind::Directed : Kind::Undirected;

    std::istringstream nl(r.next("n line"));
    long n = 0;
    nl >> tag >> n;
    if (tag != "n" || nl.fail()) throw FormatError(r.lineno, "expected 'n <integer>'");
    if (n < 3) throw FormatError(r.lineno, "n must be at least 3");

    std::string xline = r.next("x line");
    int xlineno = r.lineno;
    std::string yline = r.next("y line");
    int ylineno = r.lineno;
    HamCycle x = parse_cycle_line(xline, xlineno, 'x', static_cast<int>(n), kind);
    HamCycle y = parse_cycle_line(yline, ylineno, 'y', static_cast<int>(n), kind);
    return make_instance(std::move(x), std::move(y));
}

std::string serialize_certificate(const Certificate& cert) {
    std::ostringstream out;
    out << "HDEC-CERT v1\n";
    append_cycle(out, 'z', cert.z);
    append_cycle(out, 'w', cert.w);
    return out.str();
}

Certificate parse_certificate(const std::string& text) {
    LineReader r(text);
    if (r.next("header") != "HDEC-CERT v1")
        throw FormatError(r.lineno, "expected 'HDEC-CERT v1'");

    // Certificate files are self-contained: n is taken from the z line, and
    // any mismatch against an instance is detected at verify time.
    std::string zline = r.next("z line");
    int zlineno = r.lineno;
    std::istringstream probe(zline);
    std::string tag;
    probe >> tag;
    int count = 0;
    long v;
    while (probe >> v) ++count;
    if (tag != "z" || count < 3) throw FormatError(zlineno, "malformed 'z' line");

    // Kind is irrelevant to the stored order; verify re-tags it from the
    // instance. Parse both lines as undirected.
    Certificate cert;
    cert.z = parse_cycle_line(zline, zlineno, 'z', count, Kind::Undirected);
    std::string wline = r.next("w line");
    cert.w = parse_cycle_line(wline, r.lineno, 'w', count, Kind::Undirected);
    return cert;
}

}  // namespace hdec
