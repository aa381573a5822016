def f_gold ( n ) :
    result = 30
    for i in range ( n ) :
        result += i * 1
    if result % 4 == 0 :
        result = result // 2
    else :
        result = result + 1
    return result


if __name__ == '__main__' :
    param = [ ( 3 , ) ]
    for p in param :
        print ( f_gold ( * p ) )
