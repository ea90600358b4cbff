"""
容差递增重试

数值例程在容差过严时可能抛出 PairingFailureError / NoConvergenceError，
此处按固定倍率放宽容差后重试
"""

import logging
from typing import Callable, Type, Tuple, Optional, Any
from dataclasses import dataclass
from functools import wraps


@dataclass
class RetryConfig:
    """重试配置"""
    max_attempts: int = 3
    escalation_factor: float = 10.0  # 每次重试容差乘以此因子
    exceptions: Tuple[Type[Exception], ...] = (Exception,)
    on_retry: Optional[Callable[[int, Exception], None]] = None


def retry(
    max_attempts: int = 3,
    escalation_factor: float = 10.0,
    exceptions: Tuple[Type[Exception], ...] = (Exception,),
    tol_arg: str = 'tol',
    on_retry: Optional[Callable[[int, Exception], None]] = None
):
    """
    容差递增重试装饰器

    被装饰函数必须以关键字参数接收容差 (默认名 tol)

    Args:
        max_attempts: 最大尝试次数
        escalation_factor: 容差放大倍率
        exceptions: 需要捕获重试的异常类型
        tol_arg: 容差参数名
        on_retry: 重试时的回调函数，接收(attempt, exception)参数

    Returns:
        装饰器函数

    Example:
        @retry(max_attempts=3, exceptions=(PairingFailureError,))
        def pair(A, tol=1e-8):
            ...
    """
    def decorator(func: Callable) -> Callable:
        logger = logging.getLogger(func.__module__)

        @wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            if tol_arg not in kwargs:
                raise TypeError(f"{func.__name__} 需要以关键字参数传入 {tol_arg}")

            last_exception = None
            current_tol = kwargs[tol_arg]

            for attempt in range(1, max_attempts + 1):
                try:
                    return func(*args, **{**kwargs, tol_arg: current_tol})

                except exceptions as e:
                    last_exception = e

                    if attempt < max_attempts:
                        logger.warning(
                            f"{func.__name__} 执行失败 "
                            f"(尝试 {attempt}/{max_attempts}, {tol_arg}={current_tol:.1e}): {e}"
                        )

                        if on_retry:
                            on_retry(attempt, e)

                        current_tol *= escalation_factor
                    else:
                        logger.error(
                            f"{func.__name__} 最终失败 "
                            f"(共尝试 {max_attempts} 次): {e}"
                        )

            raise last_exception

        return wrapper

    return decorator


def retry_with_config(config: RetryConfig, tol_arg: str = 'tol'):
    """
    使用配置对象的重试装饰器

    Args:
        config: 重试配置对象
        tol_arg: 容差参数名

    Returns:
        装饰器函数
    """
    return retry(
        max_attempts=config.max_attempts,
        escalation_factor=config.escalation_factor,
        exceptions=config.exceptions,
        tol_arg=tol_arg,
        on_retry=config.on_retry
    )
