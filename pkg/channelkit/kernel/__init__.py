"""
Kernel operations, one module per concern:

    setcat   colimits and limits of finite-set diagrams
    cls      classifications, satisfaction, intent, reducts, colimits
    th       entailment, closure, translation, theory colimits
    logic    local logics, soundness, completeness, images, fiber meets
    channel  covering channels, minimal covers, fusion, flow

Submodules are imported explicitly (``from channelkit.kernel import th``);
logic and channel depend on the IFC environment, which itself is built on
cls and th.
"""
