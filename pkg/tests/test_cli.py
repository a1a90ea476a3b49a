import json
from io import StringIO

import pytest

from parasim.cli import EXIT_DATA, EXIT_OK, EXIT_USAGE, run_cli


def run(*argv):
    stdout, stderr = StringIO(), StringIO()
    code = run_cli(list(argv), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


@pytest.fixture
def simple(sample_folder):
    return str(sample_folder / 'simple.kb')


@pytest.fixture
def medical(sample_folder):
    return str(sample_folder / 'medical.kb')


@pytest.fixture
def conflicted(sample_folder):
    return str(sample_folder / 'conflicted.kb')


class TestCommands:
    def test_sim(self, simple):
        code, out, err = run('sim', simple, 'K1', 'K2')
        assert code == EXIT_OK
        assert 'S* = -1/5 (-0.20)' in out
        assert err == ''

    def test_jaccard_default_positive_only(self, simple):
        code, out, _ = run('jaccard', simple, 'K1', 'K2')
        assert code == EXIT_OK
        assert 'J = 1/3 (0.33)' in out

    def test_jaccard_all_literals(self, simple):
        _, out, _ = run('jaccard', simple, 'K1', 'K2', '--mode', 'all_literals')
        assert 'J = 1/5 (0.20)' in out

    def test_compare_flags_sign_difference(self, simple):
        code, out, _ = run('compare', simple, 'K1', 'K2')
        assert code == EXIT_OK
        assert 'Signs differ' in out

    def test_matrix(self, medical):
        code, out, _ = run('matrix', medical)
        assert code == EXIT_OK
        assert 'S*(K1, K4) = -1/6 (-0.17)' in out
        assert 'S*(K1, K3) = 1/2 (0.50)' in out

    def test_matrix_single_entity(self, sample_folder):
        code, out, _ = run('matrix', str(sample_folder / 'single.kb'))
        assert code == EXIT_OK
        assert '(none)' in out

    def test_cluster(self, medical):
        code, out, _ = run('cluster', medical, '--theta', '0.4')
        assert code == EXIT_OK
        assert 'blocks {K1,K3} | {K2} | {K4} | {K5}' in out
        assert 'Disjunction check: 0 violation(s)' in out

    def test_cluster_strict_clique(self, medical):
        _, out, _ = run('cluster', medical, '--theta=-1/6', '--mode', 'strict_clique')
        assert 'blocks {K1,K3,K5} | {K2} | {K4}' in out
        assert 'Disjunction check: 3 violation(s)' in out

    def test_cluster_empty_kb(self, tmp_path):
        path = tmp_path / 'empty.kb'
        path.write_text('# nothing yet\n', encoding='utf-8')
        code, out, err = run('cluster', str(path))
        assert code == EXIT_OK
        assert 'blocks (none)' in out
        assert 'Disjunction check: 0 violation(s)' in out
        assert err == ''

    def test_hierarchy(self, medical):
        code, out, _ = run('hierarchy', medical, '--thetas=-1/6,0,0.4')
        assert code == EXIT_OK
        assert 'theta = -1/6 (-0.17): {K1,K2,K3,K4,K5}' in out
        assert 'theta = 2/5 (0.40): {K1,K3} | {K2} | {K4} | {K5}' in out

    def test_extract(self, conflicted):
        code, out, _ = run('extract', conflicted, 'A')
        assert code == EXIT_OK
        assert 'E(K):       {p, !p}' in out
        assert 'Repairable: yes' in out

    def test_repair_enumerate(self, conflicted):
        _, out, _ = run('repair', conflicted, 'B', '--enumerate')
        assert out.count('Plan ') == 4

    def test_repair_irreparable_is_reported(self, conflicted):
        code, out, _ = run('repair', conflicted, 'C')
        assert code == EXIT_OK
        assert 'Repairable:   no' in out

    def test_forced_removal_against(self, medical):
        code, out, _ = run('repair', medical, 'K2', '--remove', '!toux', '--against', 'K1')
        assert code == EXIT_OK
        assert "K2' = {fievre, maux_de_tete}" in out
        assert "S*(K2', K1) = 0/1 (0.00)" in out


class TestFormats:
    def test_structured_cluster(self, medical):
        _, out, _ = run('cluster', medical, '--format', 'structured')
        data = json.loads(out)
        assert data['blocks'] == [['K1', 'K3'], ['K2'], ['K4'], ['K5']]
        assert data['disjunction']['ok'] is True

    def test_tsv_sim(self, simple):
        _, out, _ = run('sim', simple, 'K1', 'K2', '--format', 'tsv')
        header, row = out.splitlines()
        assert header.split('\t') == ['id1', 'id2', 'shared', 'contradictory', 'total',
                                      's_plus', 'd_pm', 's_star',
                                      's_plus_decimal', 'd_pm_decimal', 's_star_decimal']
        assert row.split('\t')[5:] == ['1/5', '2/5', '-1/5', '0.20', '0.40', '-0.20']

    def test_tsv_jaccard(self, simple):
        _, out, _ = run('jaccard', simple, 'K1', 'K2', '--format', 'tsv', '--precision', '3')
        assert out.splitlines()[1].split('\t') == ['K1', 'K2', 'positive_only', '1/3', '0.333']

    def test_tsv_matrix(self, medical):
        _, out, _ = run('matrix', medical, '--format', 'tsv')
        lines = out.splitlines()
        assert lines[0] == 'id1\tid2\ts_star\tdecimal'
        assert len(lines) == 1 + 25
        assert 'K1\tK4\t-1/6\t-0.17' in lines

    def test_tsv_cluster(self, medical):
        _, out, _ = run('cluster', medical, '--format', 'tsv')
        lines = out.splitlines()
        assert lines[0] == 'theta\ttheta_decimal\tblock\tentity_id'
        assert lines[1] == '2/5\t0.40\t1\tK1'

    def test_tsv_hierarchy(self, medical):
        _, out, _ = run('hierarchy', medical, '--thetas=-1/6,0.4', '--format', 'tsv')
        lines = out.splitlines()
        assert lines[1] == '-1/6\t-0.17\t1\tK1'
        assert lines[-1] == '2/5\t0.40\t4\tK5'

    def test_precision(self, medical):
        _, out, _ = run('matrix', medical, '--precision', '4')
        assert '-1/6 (-0.1667)' in out

    @pytest.mark.parametrize('argv', [
        ('matrix', 'medical'),
        ('cluster', 'medical', '--format', 'structured'),
        ('hierarchy', 'medical', '--thetas=-1/6,0,0.4', '--format', 'tsv'),
    ])
    def test_byte_identical_reruns(self, medical, argv):
        argv = [medical if part == 'medical' else part for part in argv]
        assert run(*argv) == run(*argv)


class TestExitCodes:
    def test_unknown_command(self):
        code, out, err = run('frobnicate')
        assert code == EXIT_USAGE
        assert out == ''
        assert err.startswith('ERROR:')

    def test_missing_argument(self, simple):
        assert run('sim', simple, 'K1')[0] == EXIT_USAGE

    def test_theta_out_of_range(self, medical):
        assert run('cluster', medical, '--theta', '2')[0] == EXIT_USAGE

    def test_theta_not_a_number(self, medical):
        assert run('cluster', medical, '--theta', 'abc')[0] == EXIT_USAGE

    def test_thresholds_not_ascending(self, medical):
        assert run('hierarchy', medical, '--thetas', '0.4,0')[0] == EXIT_USAGE

    def test_missing_file(self, tmp_path):
        code, _, err = run('matrix', str(tmp_path / 'missing.kb'))
        assert code == EXIT_DATA
        assert 'missing.kb' in err

    def test_unknown_entity(self, simple):
        code, _, err = run('sim', simple, 'K1', 'K9')
        assert code == EXIT_DATA
        assert "'K9'" in err

    def test_syntax_error(self, tmp_path):
        path = tmp_path / 'bad.kb'
        path.write_text('K1: p q\n', encoding='utf-8')
        code, _, err = run('matrix', str(path))
        assert code == EXIT_DATA
        assert 'line 1, column 7' in err

    def test_repaired_matrix_with_irreparable_entity(self, conflicted):
        code, _, err = run('matrix', conflicted, '--repaired')
        assert code == EXIT_DATA
        assert "'C'" in err

    def test_help(self):
        assert run('--help')[0] == EXIT_OK
