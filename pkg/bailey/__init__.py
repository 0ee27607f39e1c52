from bailey.pairs import *  # noqa: F401,F403
from bailey.lemma import *  # noqa: F401,F403
from bailey.propositions import *  # noqa: F401,F403
