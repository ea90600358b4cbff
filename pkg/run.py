#!/usr/bin/env python3
"""
Hermite 对称空间数值校验工具包 - 统一入口

使用方法:
    # 运行完整校验套件
    python run.py suite --out report.json

    # 只跑部分检查
    python run.py suite --checks levi,reps --families su:3,2 sp:3 --samples 1000

    # 生成配置模板
    python run.py init-config --path suite.conf.template

    # 列出配置中的群族
    python run.py families

退出码: 0 全部通过，1 存在失败，2 配置或写入错误
"""

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

# 添加项目根目录到路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_CONFIG = 2


def _load_settings(args, overrides=None):
    from config import ConfigLoader
    from src.utils import LoggerFactory

    settings = ConfigLoader(args.config).load(overrides)
    log_file = None
    if settings.output.log_to_file:
        log_file = LoggerFactory.suite_log_file(settings.output.log_dir, settings.suite.seed)
    LoggerFactory.setup(
        level=logging.DEBUG if args.verbose else logging.INFO,
        log_file=log_file
    )
    return settings


def cmd_suite(args) -> int:
    """运行校验套件"""
    from src.core.errors import ConfigParseError, WriteFailureError
    from src.services import SuiteService

    overrides = {
        'families': args.families,
        'samples': args.samples,
        'seed': args.seed,
        'tol': args.tol,
        'checks': args.checks,
        'out': args.out,
        'text_out': args.text_out,
        'workers': args.workers,
    }
    try:
        settings = _load_settings(args, overrides)
    except ConfigParseError as e:
        print(f"❌ 配置错误: {e}", file=sys.stderr)
        return EXIT_CONFIG

    service = SuiteService(settings)
    reports = service.run()

    try:
        written = service.write_reports(reports)
    except WriteFailureError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_CONFIG

    summary = service.formatter.summary(reports)
    for report in reports:
        mark = '✅' if report.passed else '❌'
        print(f"{mark} {report.check_name}  max_residual={report.max_residual:.3e}")
    print(f"\n共 {summary['total']} 项，通过 {summary['passed']}，失败 {summary['failed']}")
    for kind, path in written.items():
        if path:
            print(f"{kind} 报告: {path}")

    return EXIT_OK if summary['failed'] == 0 else EXIT_FAILED


def cmd_init_config(args) -> int:
    """生成配置模板"""
    from config import ConfigLoader

    ConfigLoader.create_template(args.path)
    print(f"✅ 配置模板已生成: {args.path}")
    return EXIT_OK


def cmd_families(args) -> int:
    """列出配置中的群族及其曲率界"""
    from src.core.errors import ConfigParseError
    from src.core.spaces import curvature_bounds

    try:
        settings = _load_settings(args)
    except ConfigParseError as e:
        print(f"❌ 配置错误: {e}", file=sys.stderr)
        return EXIT_CONFIG

    for fam in settings.suite.parsed_families():
        bounds = curvature_bounds(fam)
        print(
            f"{fam.token:<12} {fam.label:<12} 矩阵阶数 {fam.matrix_size:<3} "
            f"秩 {fam.real_rank:<2} 曲率界 [{bounds.lower:g}, {bounds.upper:g}]"
        )
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Hermite 对称空间数值校验工具包',
        formatter_class=argparse.RawDescriptionHelpFormatter
    )

    parser.add_argument(
        '--config', '-c',
        type=str,
        default='suite.conf',
        help='配置文件路径 (默认: suite.conf)'
    )
    parser.add_argument('--verbose', '-v', action='store_true', help='输出调试日志')

    subparsers = parser.add_subparsers(dest='command', help='可用命令')

    # suite 命令
    suite_parser = subparsers.add_parser('suite', help='运行校验套件')
    suite_parser.add_argument('--families', nargs='+', help='群族，如 su:3,2 sp:3 so:5,2 sostar:4')
    suite_parser.add_argument('--samples', type=str, help='随机样本数')
    suite_parser.add_argument('--seed', type=str, help='主种子')
    suite_parser.add_argument('--tol', type=str, help='全局容差')
    suite_parser.add_argument('--checks', help='检查名，逗号分隔')
    suite_parser.add_argument('--out', help='JSON 报告路径')
    suite_parser.add_argument('--text-out', dest='text_out', help='文本报告路径')
    suite_parser.add_argument('--workers', type=str, help='并发线程数')
    suite_parser.set_defaults(func=cmd_suite)

    # init-config 命令
    init_parser = subparsers.add_parser('init-config', help='生成配置模板')
    init_parser.add_argument('--path', default='suite.conf.template', help='模板输出路径')
    init_parser.set_defaults(func=cmd_init_config)

    # families 命令
    families_parser = subparsers.add_parser('families', help='列出配置中的群族')
    families_parser.set_defaults(func=cmd_families)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return EXIT_OK

    return args.func(args)


if __name__ == '__main__':
    sys.exit(main())
