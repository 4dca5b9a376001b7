import pytest
from click.testing import CliRunner

from parasyntax.languages import Language


class Runner(CliRunner):
    def invoke(self, *args, exit_code=0, **kwargs):
        result = super().invoke(*args, **kwargs)
        assert result.exit_code == exit_code, result.output
        return result


@pytest.fixture
def runner():
    cli = Runner()
    with cli.isolated_filesystem():
        yield cli


@pytest.fixture
def tmpfile(tmp_path):
    return tmp_path / "tmpfile"


@pytest.fixture(params=list(Language), ids=lambda l: l.value)
def language(request):
    return request.param


@pytest.fixture
def arith_schema():
    return """
# Arithmetic over atoms
type Arith = Add Atom Atom
type Atom = Var String | Const Lit
type Lit = Lit Int
"""


@pytest.fixture
def hoist_program():
    return """
int f(int a, int b, int s) {
  int t1 = 0, t2 = 1;
  if (s) {
    int r1 = t1*a+t2*b;
    return r1;
  }
  int r2 = t2*a+t1*b;
  return r2;
}

int main() {
  return f(2, 3, 1);
}
"""


@pytest.fixture
def hoisted_program():
    return """
int f(int a, int b, int s) {
  int t1, t2; int r2;
  t1 = 0; t2 = 1;
  if (s) {
    int r1;
    r1 = t1*a+t2*b;
    return r1;
  }
  r2 = t2*a+t1*b;
  return r2;
}

int main() {
  return f(2, 3, 1);
}
"""


@pytest.fixture
def count_program():
    return """
function countF()
  local count = 0
  for i = 1, 9 do
    if f(i) then
      count = count + 1
      break
    else
      print(i)
    end
  end
  return count
end
"""


@pytest.fixture
def counted_program():
    return """
function countF()
  TC.cov[0] = true
  local count = 0
  for i = 1, 9 do
    TC.cov[1] = true
    if f(i) then
      TC.cov[2] = true
      count = count + 1
      break
    else
      TC.cov[3] = true
      print(i)
    end
  end
  TC.cov[4] = true
  return count
end
"""


@pytest.fixture
def continue_program():
    return """
function main() {
  var c = 0;
  while (c < 3) {
    c = c + 1;
    if (c == 1) continue;
    print(c);
  }
  return c;
}
"""
