# The four cohomology theories, their dualities, and the Hard Lefschetz
# / dd^Lambda-lemma decision, over the whole built-in corpus.
#
# Run with:  python demos/04_cohomologies_and_hlc.py

from sympcoh import SymplecticCohomology, corpus, structure_from_model

for model in corpus():
    coh = SymplecticCohomology(structure_from_model(model))
    dim = coh.s.dim
    print(f"== {model.name} ==")
    print("  betti               :", list(coh.betti))
    print("  H_dLambda dims      :", list(coh.dlambda_dims))
    print("  H_(d+dLambda) dims  :", [sp.dim for sp in coh.d_plus_dlambda])
    print("  H_(ddLambda) dims   :", list(coh.ddlambda_dims))

    # Star conjugation gives dim H^k_dLambda = b_{2n-k} on the nose, and
    # the top-degree pairing matches dd^Lambda against d+d^Lambda.
    assert coh.dlambda_dims == tuple(coh.betti[dim - k] for k in range(dim + 1))
    assert coh.ddlambda_dims == tuple(
        coh.d_plus_dlambda[dim - k].dim for k in range(dim + 1)
    )

    # Primitive (d+dLambda)-cohomology, computed via both defining
    # formulas (they must agree), underlies its own Lefschetz structure.
    ph = [coh.primitive_ph_plus(sdeg).dim for sdeg in range(coh.s.n + 1)]
    print("  PH_(d+dLambda) dims :", ph)
    coh.d_plus_dlambda_lefschetz_check()

    hlc = coh.hlc()
    lemma = coh.dd_lemma()
    print("  hard Lefschetz      :", hlc.overall, [int(x) for x in hlc.per_degree])
    print("  dd^Lambda-lemma     :", lemma)
    assert hlc.overall == lemma
