"""jacring: exact symbolic calculus on the cohomology of a Jacobian and on
its P1-bundle extension, with an executable audit of the identities the model
supports."""

__version__ = "0.1.0"
