from .containers import *
from .kinds import *
from .sorts import *
from .term import *
