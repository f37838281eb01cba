"""Sample automata exposed through the gallery registry."""
from pcfa_workbench.gallery.registry import register_automaton
from pcfa_workbench.oca.catalog import build_delay_oca, build_sample_oca, build_signal_oca

register_automaton("oca-sample", "three cells c d d accepted at t = 3; sink z elsewhere")(build_sample_oca)
register_automaton("oca-signal", "unary inputs a^n accepted exactly at t = n")(build_signal_oca)
register_automaton("oca-delay3", "every unary input accepted at t = 3")(lambda: build_delay_oca(3))
