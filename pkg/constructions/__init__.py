from .examples import (
    ClaimedAbsence, ExtremalInstance, GENERATORS, generate,
    gen_example1, gen_example2, gen_example3, gen_example4,
    gen_example5, gen_example6, gen_example7,
)
