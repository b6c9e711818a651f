#include <iostream>
#include "nct/tower.hpp"
#include "nct/presets.hpp"
#include "nct/hom.hpp"
#include "nct/error.hpp"
using namespace nct;
int main() {
    PermGroup s3 = preset_group("S3");
    PermGroup s4 = preset_group("S4");
    GroupHom inc34 = make_hom(s3, s4, {Perm::from_images({2,1,3,4}), Perm::from_images({2,3,1,4})});
    ReductionRecord rr = reduce(inc34);
    PresentedGroup dom = rr.reduced_domain;
    GroupHom cur = rr.psi;
    for (int stage = 2; stage <= 8; ++stage) {
        ClosureOptions co; co.max_cosets = 171564; co.domain_presentation = dom;
        ClosureResult c = free_normal_closure(cur, co);
        std::cout << "stage " << stage << ": |G|=" << c.closure_group.order()
                  << " deg=" << c.closure_group.degree()
                  << " fast=" << c.fast_path
                  << " surj=" << c.boundary.boundary().is_surjective() << std::endl;
        if (c.closure_group.order() == cur.codomain().order() &&
            c.boundary.boundary().is_surjective()) { std::cout << "stabilized" << std::endl; break; }
        cur = c.structural;
    }
    return 0;
}
