mod common;

use common::globe_oracle::{bfs_hom, bfs_leq};
use gwt_core::globe::{filt_map_s, filt_map_t, hom_classes, leq, GlobeContext};

#[test]
fn leq_and_hom_match_search() {
    for n in 0..=5 {
        let ctx = GlobeContext::new(n);
        let objs = ctx.objects_up_to(6);
        for &a in &objs {
            for &b in &objs {
                assert_eq!(leq(ctx, a, b), bfs_leq(ctx, a, b), "n={n} {a} <= {b}");
                assert_eq!(hom_classes(ctx, a, b), bfs_hom(ctx, a, b), "n={n} hom({a}, {b})");
            }
        }
    }
}

#[test]
fn leq_is_a_partial_order() {
    let ctx = GlobeContext::new(4);
    let objs = ctx.objects_up_to(5);
    for &a in &objs {
        assert!(leq(ctx, a, a));
        for &b in &objs {
            if a != b && leq(ctx, a, b) {
                assert!(!leq(ctx, b, a));
            }
            for &c in &objs {
                if leq(ctx, a, b) && leq(ctx, b, c) {
                    assert!(leq(ctx, a, c));
                }
            }
        }
    }
}

#[test]
fn filtration_maps_preserve_order() {
    for n in 1..=4 {
        let (lo, hi) = (GlobeContext::new(n - 1), GlobeContext::new(n));
        let objs = lo.objects_up_to(5);
        for &a in &objs {
            for &b in &objs {
                if leq(lo, a, b) {
                    assert!(leq(hi, filt_map_s(hi, a).unwrap(), filt_map_s(hi, b).unwrap()));
                    assert!(leq(hi, filt_map_t(hi, a).unwrap(), filt_map_t(hi, b).unwrap()));
                }
            }
        }
    }
}
