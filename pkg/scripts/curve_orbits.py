#!/usr/bin/env python3
"""Build the plane-curve automorphism actions over F_19 extensions and
print group orders and orbit structures."""

from zomo import analysis, curves


def show(name, G, domain, k):
    orbits = curves.orbit_structure(G, len(domain))
    print("%-12s order %-4d k=%d domain %-5d orbits %s"
          % (name, G.order, k, len(domain),
             " ".join("%dx%d" % (c, s) for s, c in orbits)))


def main():
    maps27 = curves.x0_scaling_maps(19)
    G, S, dom, k = curves.automorphism_group(maps27, curves.x0_curve(), 19)
    show("scalings", G, dom, k)

    maps81 = maps27 + [curves.x0_alpha2()]
    G, S, dom, k = curves.automorphism_group(maps81, curves.x0_curve(), 19)
    show("with-a2", G, dom, k)
    print("  center order %d" % len(analysis.center(G).members))

    G, S, dom, k = curves.automorphism_group(curves.fermat9_maps(19),
                                             curves.fermat9_curve(), 19)
    show("fermat9", G, dom, k)

    G, dom, k = curves.genus28_group(19)
    print("%-12s order %-4d k=%d domain %d"
          % ("space-model", G.order, k, len(dom)))


if __name__ == "__main__":
    main()
