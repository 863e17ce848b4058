"""Densities, capacity loss and ergodic capacity of kappa-mu shadowed fading
and the classic fading models it contains"""
import argparse
import logging
import sys

import numpy as np

import logs
import config
import specfun
import channel_models
import physical_sampler
import capacity
import figures
import verification
from specfun.errors import DomainError, NonConvergence, QuadratureFailure
from utils.util import parse_grid, db_to_linear

LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

FIGURE_CHOICES = tuple(str(k) for k in sorted(config.FIGURES)) + ('all',)


def _grid(text):
    try:
        return parse_grid(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _subparser(subparsers, name, func, help_text, with_model=True):
    parser = subparsers.add_parser(
        name, help=help_text, description=help_text,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    parser.set_defaults(func=func)
    logs.cli(parser)
    specfun.series_cli(parser)
    config.run_cli(parser)
    if with_model:
        channel_models.model_cli(parser)
    else:
        channel_models.policy_cli(parser)
    return parser


def cli():
    parser = argparse.ArgumentParser(
        prog='fadinglab',
        description=__doc__,
        formatter_class=argparse.ArgumentDefaultsHelpFormatter)
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    pdf = _subparser(subparsers, 'pdf', cmd_pdf, 'density of the instantaneous SNR on a grid')
    pdf.add_argument('--grid', default='0:5:0.1', type=_grid,
                     help="SNR values (linear), 'start:stop:step' or a comma list")
    pdf.add_argument('--reduced', default=False, action='store_true',
                     help='evaluate the reduced kappa-mu shadowed density instead of the native one')

    _subparser(subparsers, 'loss', cmd_loss, 'ergodic capacity loss at high SNR in bps/Hz')

    cap = _subparser(subparsers, 'capacity', cmd_capacity,
                     'ergodic capacity and its high-SNR asymptote over a mean SNR grid')
    cap.add_argument('--grid', default='0:30:1', type=_grid,
                     help="mean SNR values in dB, 'start:stop:step' or a comma list")
    cap.add_argument('--mc', default=False, action='store_true',
                     help='add a Monte Carlo estimate of --samples draws per point')

    fig = _subparser(subparsers, 'figure', cmd_figure,
                     'curve data of the capacity figures, one csv per legend entry',
                     with_model=False)
    fig.add_argument('--figure', default='all', choices=FIGURE_CHOICES,
                     help='figure to compute')
    fig.add_argument('--mc', default=False, action='store_true',
                     help='add Monte Carlo columns to the capacity figures')

    smp = _subparser(subparsers, 'sample', cmd_sample, 'Monte Carlo draws of the instantaneous SNR')
    physical_sampler.sampler_cli(smp)

    ver = _subparser(subparsers, 'verify', cmd_verify, 'run the invariant suite',
                     with_model=False)
    verification.verify_cli(ver)
    return parser


def _progress(args):
    return not args.quiet and sys.stderr.isatty()


def cmd_pdf(args):
    model = channel_models.model_factory(args)
    ctrl = specfun.series_factory(args)
    run = config.run_factory(args)
    if args.reduced:
        p = channel_models.reduce_to_shadowed(
            model, channel_models.policy_factory(args), args.table_row)
        density = channel_models.pdf_kappa_mu_shadowed(p, args.grid, ctrl)
    else:
        density = channel_models.pdf_native(model, args.grid, ctrl)
    meta = {'model': dict(type=type(model).__name__, **model.native()), 'reduced': args.reduced}
    figures.write_table({'gamma': args.grid, 'density': density}, run.out_path,
                        run.output_format, meta)
    return EXIT_OK


def cmd_loss(args):
    model = channel_models.model_factory(args)
    ctrl = specfun.series_factory(args)
    run = config.run_factory(args)
    loss = capacity.loss_table2(model, ctrl)
    meta = {'model': dict(type=type(model).__name__, **model.native())}
    figures.write_table({'loss': [loss.loss_bits]}, run.out_path, run.output_format, meta)
    return EXIT_OK


def cmd_capacity(args):
    model = channel_models.model_factory(args)
    ctrl = specfun.series_factory(args)
    run = config.run_factory(args)
    policy = channel_models.policy_factory(args)
    if args.mc:
        run.require_mc()
    gbar_db = args.grid
    gbar = db_to_linear(gbar_db)
    columns = {'gbar_db': gbar_db, 'gbar_linear': gbar,
               'asymptotic': np.array([capacity.asymptotic_capacity(model, g, ctrl) for g in gbar]),
               'quadrature': np.array([capacity.ergodic_capacity_quadrature(
                   model, g, policy=policy, ctrl=ctrl) for g in gbar])}
    if args.mc:
        means, errors = [], []
        for k, g in enumerate(gbar):
            if isinstance(model, channel_models.Awgn):
                means.append(np.log2(1.0 + g))
                errors.append(0.0)
                continue
            p = channel_models.reduce_to_shadowed(model.with_gamma_bar(g), policy, args.table_row)
            batch = physical_sampler.sample_conditional(
                p, run.mc_samples, physical_sampler.derive_seed(run.seed, k))
            estimate = capacity.ergodic_capacity_mc(batch)
            means.append(estimate.mean)
            errors.append(estimate.std_error)
        columns['mc_mean'] = np.array(means)
        columns['mc_std_error'] = np.array(errors)
    meta = {'model': dict(type=type(model).__name__, **model.native()),
            'seed': run.seed if args.mc else None}
    figures.write_table(columns, run.out_path, run.output_format, meta)
    return EXIT_OK


def cmd_figure(args):
    ctrl = specfun.series_factory(args)
    run = config.run_factory(args)
    policy = channel_models.policy_factory(args)
    if args.mc:
        run.require_mc()
    ids = sorted(config.FIGURES) if args.figure == 'all' else [int(args.figure)]
    failed = False
    for figure_id in ids:
        spec = config.FIGURES[figure_id]
        mc_samples = run.mc_samples if args.mc and spec.kind == config.CAPACITY else None
        result = figures.write_figure(spec, run.out_path or '.', mc_samples, run.seed,
                                      policy, ctrl, _progress(args))
        for path in result.paths:
            print(path)
        for failure in result.failures:
            print('fadinglab: numeric failure at {}'.format(failure), file=sys.stderr)
        failed = failed or bool(result.failures)
    return EXIT_NUMERIC if failed else EXIT_OK


def cmd_sample(args):
    model = channel_models.model_factory(args)
    ctrl = specfun.series_factory(args)
    run = config.run_factory(args)
    run.require_mc()
    p = channel_models.reduce_to_shadowed(model, channel_models.policy_factory(args),
                                          args.table_row)
    generative = physical_sampler.sampler_factory(args, p)
    batch = physical_sampler.sample(generative, p.gamma_bar, run.mc_samples, run.seed,
                                    args.workers)
    if run.out_path and run.output_format == 'csv':
        physical_sampler.save_batch(batch, run.out_path, 'csv')
    else:
        figures.write_table({'snr': batch.snr_values}, run.out_path, run.output_format,
                            batch.sidecar())
    if args.gof:
        result = physical_sampler.chi_square_gof(
            batch.snr_values, physical_sampler.TabulatedCdf.shadowed(p, ctrl), args.bins)
        print('chi-square statistic={:.6g} dof={} p-value={:.6g}'.format(
            result.statistic, result.dof, result.p_value), file=sys.stderr)
    return EXIT_OK


def cmd_verify(args):
    ctrl = specfun.series_factory(args)
    run = config.run_factory(args)
    ctx = verification.verify_factory(args, run, channel_models.policy_factory(args), ctrl)
    progress = None
    if _progress(args):
        from tqdm import tqdm
        progress = lambda checks: tqdm(checks, desc='verify')
    results = verification.run_checks(ctx, progress=progress)
    report = verification.build_report(ctx, results)
    if args.report:
        verification.write_report(report, args.report)
    if run.output_format == 'json':
        figures.write_table({'passed': [float(r.passed) for r in results]}, run.out_path, 'json',
                            report)
    else:
        print('\n'.join(verification.summary_lines(report)))
    return EXIT_OK if report['passed'] else EXIT_VERIFY_FAILED


def _point(args):
    names = ('model', 'kappa', 'mu', 'm', 'eta', 'q', 'K', 'gbar', 'gbar_db')
    return {n: getattr(args, n) for n in names if getattr(args, n, None) is not None}


def main(argv=None):
    parser = cli()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    try:
        logs.configure(args)
        return args.func(args)
    except DomainError as exc:
        print('fadinglab {}: error: {}'.format(args.command, exc), file=sys.stderr)
        return EXIT_USAGE
    except (NonConvergence, QuadratureFailure) as exc:
        detail = getattr(exc, 'params', None) or getattr(exc, 'interval', None)
        print('fadinglab {}: numeric failure at {}: {} ({})'.format(
            args.command, _point(args), exc, detail), file=sys.stderr)
        LOG.error({'type': 'numeric-failure', 'point': _point(args), 'error': str(exc)})
        return EXIT_NUMERIC


if __name__ == '__main__':
    sys.exit(main())
