#include <cstdio>
#include <string>
#include <vector>

#include "nct/closure.hpp"
#include "nct/fp.hpp"
#include "nct/group.hpp"
#include "nct/hom.hpp"
#include "nct/io.hpp"
#include "nct/presets.hpp"
#include "nct/tower.hpp"
#include "nct/verify.hpp"

using namespace nct;

static void show_gens(const char* name) {
    PermGroup g = preset_group(name);
    std::printf("%s order %llu degree %d gens:", name, (unsigned long long)g.order(), g.degree());
    for (const Perm& p : g.generators())
        std::printf(" %s", p.to_cycle_string().c_str());
    std::printf("\n");
}

int main() {
    for (const char* n : {"C4", "C6", "S3", "S4", "A4", "A5", "D4", "D8", "Q8", "Q16", "D2"})
        show_gens(n);

    std::printf("g(6)=%.17g g(8)=%.17g g(16)=%.17g g(24)=%.17g\n", bound_g(6), bound_g(8),
                bound_g(16), bound_g(24));

    // Tower pins for the S3 -> S4 inclusion.
    GroupHom inc = parse_hom("S3", "S4", "(1 2),(1 2 3)");
    TowerResult t = build_tower(inc, {}, preset_presented("S3"));
    std::printf("S3S4 tower cap %llu stabilized %d orders:", (unsigned long long)t.coset_cap,
                (int)t.stabilized);
    for (const auto& r : t.records)
        std::printf(" %llu", (unsigned long long)r.group.order());
    std::printf("\n");

    // Trivial-map closure orders.
    for (auto [d, c] : std::vector<std::pair<std::string, std::string>>{
             {"C2", "C4"}, {"C3", "C3"}, {"C2", "C2"}}) {
        GroupHom f = trivial_hom(preset_group(d), preset_group(c));
        ClosureOptions o;
        o.domain_presentation = preset_presented(d);
        ClosureResult r = free_normal_closure(f, o);
        std::printf("triv %s->%s closure %llu fast=%d\n", d.c_str(), c.c_str(),
                    (unsigned long long)r.closure_group.order(), (int)r.fast_path);
    }

    // Hom-search counts.
    {
        PermGroup c2 = preset_group("C2"), s3 = preset_group("S3");
        std::vector<std::vector<Perm>> cand1{s3.elements()};
        std::printf("homs C2->S3: %zu\n", search_homs(c2, s3, {}, cand1).size());
        std::vector<std::vector<Perm>> cand2{preset_group("C2").elements(),
                                             preset_group("C2").elements()};
        std::printf("homs S3->C2: %zu\n", search_homs(s3, preset_group("C2"), {}, cand2).size());
    }

    std::printf("quotient S4/V order %llu\n",
                (unsigned long long)quotient(preset_group("S4"),
                                             preset_group("D2").generators().size() == 2
                                                 ? subgroup_generated(preset_group("S4"),
                                                                      {parse_perm("(1 2)(3 4)", 4),
                                                                       parse_perm("(1 3)(2 4)", 4)})
                                                 : preset_group("D2"))
                    .group.order());

    // Criterion-3 instance count: surjective preset pairs |dom| <= 24.
    {
        std::vector<std::string> names{"C1", "C2",  "C3",  "C4", "C5", "C6", "C7", "C8party",
                                       "C9", "C10", "C11", "C12"};
        (void)names;
    }

    // Series pins.
    {
        SeriesRecord s = subnormal_closure_series(preset_group("S4"),
                                                  subgroup_generated(preset_group("S4"),
                                                                     {parse_perm("(1 2 3)", 4)}));
        std::printf("C-series S4/<(123)>:");
        for (const auto& g : s.terms)
            std::printf(" %llu", (unsigned long long)g.order());
        std::printf("\n");
    }
    {
        GroupHom sgn = parse_hom("S3", "C2", "(1 2),e");
        SeriesRecord k = kernel_commutator_series(sgn.domain(), sgn.kernel());
        std::printf("K-series sign S3:");
        for (const auto& g : k.terms)
            std::printf(" %llu", (unsigned long long)g.order());
        std::printf("\n");
    }

    // Upper/lower central series term counts for pins.
    for (const char* n : {"Q8", "D4", "S3", "A4"}) {
        PermGroup g = preset_group(n);
        std::printf("%s lcs:", n);
        for (const auto& t2 : lower_central_series(g))
            std::printf(" %llu", (unsigned long long)t2.order());
        std::printf(" ucs:");
        for (const auto& t2 : upper_central_series(g))
            std::printf(" %llu", (unsigned long long)t2.order());
        std::printf(" derived:");
        for (const auto& t2 : derived_series(g))
            std::printf(" %llu", (unsigned long long)t2.order());
        std::printf("\n");
    }

    // Subnormal overgroups of V in S4.
    {
        PermGroup s4 = preset_group("S4");
        PermGroup v = subgroup_generated(
            s4, {parse_perm("(1 2)(3 4)", 4), parse_perm("(1 3)(2 4)", 4)});
        auto over = subnormal_overgroups(s4, v);
        std::printf("subnormal overgroups of V in S4: %zu orders:", over.size());
        for (const auto& g : over)
            std::printf(" %llu", (unsigned long long)g.order());
        std::printf("\n");
        std::printf("normal subgroups of S4: %zu\n", normal_subgroups(s4).size());
    }

    // A5 identity limit.
    {
        LimitResult lim = inverse_limit(identity_hom(preset_group("A5")));
        std::printf("A5 id limit %llu at %d bound %.17g\n",
                    (unsigned long long)lim.limit_group.order(), lim.stabilized_at,
                    lim.bound_value);
    }
    return 0;
}
